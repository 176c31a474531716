#pragma once

#include "polycommute/multipoly.hpp"

namespace polycommute {

/// Invertible affine map z -> a*z + b.
class AffineMap {
 public:
  /// Throws PreconditionError when a is zero.
  AffineMap(Scalar a, Scalar b);

  static AffineMap identity() { return {Scalar(1), Scalar(0)}; }
  static AffineMap translation(const Scalar& b) { return {b.one_like(), b}; }
  static AffineMap scaling(const Scalar& a) { return {a, a.zero_like()}; }

  const Scalar& a() const noexcept { return a_; }
  const Scalar& b() const noexcept { return b_; }

  Scalar operator()(const Scalar& z) const { return a_ * z + b_; }
  AffineMap inverse() const;
  /// The map as a polynomial in one variable.
  UniPoly as_poly() const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  Scalar a_;
  Scalar b_;
};

/// outer o inner
AffineMap compose(const AffineMap& outer, const AffineMap& inner);

/// C_map(R) = map o R(map^-1(z1), ..., map^-1(z_nu)).
MultiPoly affine_conjugate(const AffineMap& map, const MultiPoly& poly);
UniPoly affine_conjugate(const AffineMap& map, const UniPoly& poly);

}  // namespace polycommute
