#include "polycommute/analyzer.hpp"

#include <algorithm>

namespace polycommute {

namespace {

unsigned degree_of(const UniPoly& p) {
  const Degree d = p.degree();
  return d.is_negative_infinity() ? 0U : static_cast<unsigned>(d.value());
}

Scalar unit_for(const UniPoly& p) { return p.is_zero() ? Scalar(1) : p.leading().one_like(); }

Scalar unit_for(const MultiPoly& q) {
  return q.is_zero() ? Scalar(1) : q.terms().begin()->second.one_like();
}

std::vector<RootMultiplicity> roots_in_backend(const UniPoly& u) {
  if (u.leading().is_exact()) return gaussian_rational_roots(u);
  return numeric_roots(u, u.leading().epsilon());
}

/// Position on the circle, counterclockwise from the positive real axis.
bool precedes_in_argument(const Scalar& lhs, const Scalar& rhs) {
  auto half = [](const Scalar& z) {
    const BigFloat im = z.float_imag();
    return im < 0 || (im == 0 && z.float_real() < 0) ? 1 : 0;
  };
  if (half(lhs) != half(rhs)) return half(lhs) < half(rhs);
  return lhs.float_real() * rhs.float_imag() - lhs.float_imag() * rhs.float_real() > 0;
}

/// c with c^k = value; the principal root when several lie in the backend.
std::optional<Scalar> first_root_of(const Scalar& value, unsigned k) {
  if (k == 1) return value;
  const UniPoly equation = UniPoly::power(k, value.one_like()) - UniPoly::power(0, value);
  const auto roots = roots_in_backend(equation);
  if (roots.empty()) return std::nullopt;
  auto best = roots.begin();
  for (auto it = roots.begin(); it != roots.end(); ++it) {
    if (precedes_in_argument(it->root, best->root)) best = it;
  }
  return best->root;
}

/// z -> c(z - r) where P has fixed point r and c^(n-1) = leading coefficient.
std::optional<AffineMap> normalizing_map(const UniPoly& p, const Scalar& fixed_point) {
  const auto c = first_root_of(p.leading(), degree_of(p) - 1);
  if (!c) return std::nullopt;
  return compose(AffineMap::scaling(*c), AffineMap::translation(-fixed_point));
}

void add(ClassificationReport& report, std::string name, bool pass) {
  report.diagnostics.push_back({std::move(name), pass});
}

std::string var_name(std::size_t var) { return "x" + std::to_string(var + 1); }

/// Root analysis on the monic rescaling of (P, Q). Skipped when
/// P cannot be made monic in the backend or the top coefficient involves
/// several variables.
void root_analysis(ClassificationReport& report, const UniPoly& p, const MultiPoly& q) {
  const unsigned n = degree_of(p);
  const auto c = first_root_of(p.leading(), n - 1);
  if (!c) return;
  const AffineMap sigma = AffineMap::scaling(*c);
  const UniPoly monic = affine_conjugate(sigma, p);
  const MultiPoly rescaled = affine_conjugate(sigma, q);
  for (std::size_t v = 0; v < rescaled.arity(); ++v) {
    if (!rescaled.depends_on(v)) continue;
    const MultiPoly top = coeff_polys_in(rescaled, v).back();
    if (top.dependent_variable_count() != 1) return;
    std::size_t w = 0;
    while (!top.depends_on(w)) ++w;
    const RootProfile profile = root_profile(restrict_to(top, w));
    bool pass = profile.complete && profile.distinct() == 1;
    if (pass) {
      const auto deduced = deduce_p_from_root_map(profile, n);
      pass = deduced.has_value() && *deduced == monic;
    }
    add(report, "root_analysis[" + var_name(v) + "]", pass);
    return;
  }
}

}  // namespace

MultiPoly commutator_residual(const UniPoly& p, const MultiPoly& q) {
  return compose_each(q, p) - compose_outer(p, q);
}

bool check_nondegeneracy(const MultiPoly& q) { return q.dependent_variable_count() >= 2; }

std::vector<Scalar> fixed_points(const UniPoly& p) {
  if (p.degree() < Degree(1)) throw PreconditionError("fixed points need deg P >= 1");
  const UniPoly shifted = p - UniPoly::power(1, p.leading().one_like());
  if (shifted.is_zero()) throw PreconditionError("every point is fixed by the identity");
  std::vector<Scalar> result;
  if (shifted.degree() == Degree(0)) return result;
  for (auto& entry : roots_in_backend(shifted)) result.push_back(std::move(entry.root));
  return result;
}

std::optional<Normalization> normalize_unipoly(const UniPoly& p) {
  if (p.degree() <= Degree(1)) throw PreconditionError("normalization needs deg P > 1");
  const auto points = fixed_points(p);
  if (points.empty()) return std::nullopt;
  const auto map = normalizing_map(p, points.front());
  if (!map) return std::nullopt;
  return Normalization{*map, affine_conjugate(*map, p)};
}

bool leading_coeff_equation_check(const UniPoly& p, const MultiPoly& q, std::size_t var) {
  if (!q.depends_on(var)) throw PreconditionError("Q does not involve " + var_name(var));
  if (p.degree() < Degree(1)) throw PreconditionError("leading coefficient equation needs deg P >= 1");
  const unsigned n = degree_of(p);
  const auto parts = coeff_polys_in(q, var);
  const auto m = static_cast<unsigned>(parts.size() - 1);
  const MultiPoly& top = parts.back();
  return top.pow(n) == compose_each(top, p).scaled(p.leading().pow(m - 1));
}

UniPoly RootProfile::expand() const {
  UniPoly result = UniPoly::power(0, leading);
  for (const auto& [root, multiplicity] : entries) {
    const UniPoly factor = UniPoly::from_coefficients({-root, root.one_like()});
    for (unsigned k = 0; k < multiplicity; ++k) result = result * factor;
  }
  return result;
}

RootProfile root_profile(const UniPoly& u) {
  if (u.degree() < Degree(1)) throw PreconditionError("root profile needs a nonconstant polynomial");
  RootProfile profile;
  profile.leading = u.leading();
  profile.entries = roots_in_backend(u);
  long total = 0;
  for (const auto& entry : profile.entries) total += entry.multiplicity;
  profile.complete = Degree(total) == u.degree();
  return profile;
}

std::optional<UniPoly> deduce_p_from_root_map(const RootProfile& profile, unsigned n) {
  if (n <= 1) throw PreconditionError("root-map deduction needs n > 1");
  if (!profile.complete) throw PreconditionError("root-map deduction needs a complete profile");
  if (profile.distinct() != 1) return std::nullopt;
  const Scalar& r0 = profile.entries.front().root;
  const MultiPoly shifted = UniPoly::from_coefficients({-r0, r0.one_like()}).poly().pow(n);
  return UniPoly(shifted) + UniPoly::power(0, r0);
}

bool check_power_equation(const MultiPoly& q, unsigned n) {
  if (n <= 1) throw PreconditionError("power equation needs n > 1");
  return compose_each(q, UniPoly::power(n, unit_for(q))) == q.pow(n);
}

MonomialAudit monomial_theorem_check(const MultiPoly& q, unsigned n) {
  if (n <= 1) throw PreconditionError("power equation needs n > 1");
  if (q.is_constant()) throw PreconditionError("monomial audit needs a nonconstant Q");
  MonomialAudit audit;
  audit.satisfies_power_equation = check_power_equation(q, n);
  for (const auto& part : homogeneous_parts(q).parts) audit.nonzero_homogeneous_parts += part.is_zero() ? 0 : 1;
  audit.monomial = q.as_monomial();
  if (audit.monomial) {
    audit.coefficient_is_root_of_unity = audit.monomial->coefficient.pow(n - 1).is_one();
  }
  audit.violation = audit.satisfies_power_equation &&
                    !(audit.nonzero_homogeneous_parts == 1 && audit.monomial &&
                      audit.coefficient_is_root_of_unity);
  return audit;
}

bool check_leading_nonconstant(const UniPoly& p, const MultiPoly& q) {
  if (p.degree() <= Degree(1)) throw PreconditionError("needs deg P > 1");
  if (!check_nondegeneracy(q)) throw PreconditionError("needs a nondegenerate Q");
  if (!commutes(p, q)) throw PreconditionError("needs a commuting pair");
  for (std::size_t v = 0; v < q.arity(); ++v) {
    if (!q.depends_on(v)) continue;
    if (coeff_polys_in(q, v).back().is_constant()) return false;
  }
  return true;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::normal_form: return "NormalForm";
    case Verdict::not_commuting: return "NotCommuting";
    case Verdict::degenerate_single_variable: return "DegenerateSingleVariable";
    case Verdict::degree_one_p: return "DegreeOneP";
    case Verdict::constant_q: return "ConstantQ";
    case Verdict::exact_backend_insufficient: return "ExactBackendInsufficient";
  }
  return "Unknown";
}

ClassificationReport classify(const UniPoly& p, const MultiPoly& q) {
  ClassificationReport report;
  MultiPoly residual = commutator_residual(p, q);
  add(report, "commutation", residual.is_zero());
  if (!residual.is_zero()) {
    report.verdict = Verdict::not_commuting;
    report.residual = std::move(residual);
    return report;
  }
  if (p.degree() <= Degree(1)) {
    report.verdict = Verdict::degree_one_p;
    return report;
  }
  if (q.is_constant()) {
    report.verdict = Verdict::constant_q;
    return report;
  }
  const bool nondegenerate = check_nondegeneracy(q);
  add(report, "nondegeneracy", nondegenerate);
  if (!nondegenerate) {
    report.verdict = Verdict::degenerate_single_variable;
    return report;
  }

  add(report, "leading_coefficient_nonconstant", check_leading_nonconstant(p, q));
  for (std::size_t v = 0; v < q.arity(); ++v) {
    if (q.depends_on(v)) {
      add(report, "leading_coefficient_equation[" + var_name(v) + "]",
          leading_coeff_equation_check(p, q, v));
    }
  }
  root_analysis(report, p, q);

  const unsigned n = degree_of(p);
  const UniPoly target = UniPoly::power(n, unit_for(p));
  for (const auto& r : fixed_points(p)) {
    const auto lambda = normalizing_map(p, r);
    if (!lambda) break;
    if (!(affine_conjugate(*lambda, p) == target)) continue;
    const MultiPoly image = affine_conjugate(*lambda, q);
    const auto monomial = image.as_monomial();
    if (!monomial) continue;
    const MonomialAudit audit = monomial_theorem_check(image, n);
    add(report, "monomial_test", audit.satisfies_power_equation && !audit.violation);
    if (!audit.coefficient_is_root_of_unity) continue;
    report.verdict = Verdict::normal_form;
    report.normal_form = NormalForm{*lambda, n, monomial->exponents, monomial->coefficient};
    return report;
  }
  add(report, "normal_form", false);
  report.verdict = Verdict::exact_backend_insufficient;
  return report;
}

bool reverify(const ClassificationReport& report, const UniPoly& p, const MultiPoly& q) {
  switch (report.verdict) {
    case Verdict::normal_form: {
      if (!report.normal_form) return false;
      const auto& nf = *report.normal_form;
      const Scalar one = unit_for(p);
      return affine_conjugate(nf.lambda, p) == UniPoly::power(nf.n, one) &&
             affine_conjugate(nf.lambda, q) == MultiPoly::monomial(nf.c, nf.alpha) &&
             nf.c.pow(nf.n - 1).is_one() && !nf.alpha.is_zero();
    }
    case Verdict::not_commuting:
      return report.residual && !report.residual->is_zero() &&
             *report.residual == commutator_residual(p, q);
    default:
      return commutes(p, q);
  }
}

}  // namespace polycommute
