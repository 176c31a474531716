#include "polycommute/affine.hpp"

namespace polycommute {

AffineMap::AffineMap(Scalar a, Scalar b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero()) throw PreconditionError("affine map needs a nonzero linear coefficient");
  if (a_.backend() != b_.backend()) throw BackendMismatch("affine map: mixed backends");
}

AffineMap AffineMap::inverse() const {
  const Scalar inv = a_.inverse();
  return {inv, -(b_ * inv)};
}

UniPoly AffineMap::as_poly() const {
  return UniPoly::from_coefficients({b_, a_});
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
  return {outer.a() * inner.a(), outer.a() * inner.b() + outer.b()};
}

MultiPoly affine_conjugate(const AffineMap& map, const MultiPoly& poly) {
  const MultiPoly substituted = compose_each(poly, map.inverse().as_poly());
  return substituted.scaled(map.a()) + MultiPoly::constant(poly.arity(), map.b());
}

UniPoly affine_conjugate(const AffineMap& map, const UniPoly& poly) {
  return UniPoly(affine_conjugate(map, poly.poly()));
}

}  // namespace polycommute
