#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polycommute/affine.hpp"
#include "polycommute/multipoly.hpp"
#include "polycommute/roots.hpp"

namespace polycommute {

/// Q(P(x1), ..., P(x_nu)) - P(Q(x1, ..., x_nu)); zero exactly when P and Q
/// commute.
MultiPoly commutator_residual(const UniPoly& p, const MultiPoly& q);
inline bool commutes(const UniPoly& p, const MultiPoly& q) {
  return commutator_residual(p, q).is_zero();
}

/// True when q depends on at least two distinct variables.
bool check_nondegeneracy(const MultiPoly& q);

/// Solutions of P(r) = r, canonical order. The exact backend returns the
/// ones lying in Q(i); the floating backend returns all of them.
/// Throws PreconditionError when deg P < 1 or P is the identity.
std::vector<Scalar> fixed_points(const UniPoly& p);

struct Normalization {
  AffineMap map;
  UniPoly normalized;
};

/// Affine map sending P to a monic polynomial vanishing at 0: shift by the
/// first fixed point in canonical order, then scale by the principal c with
/// c^(deg P - 1) equal to the leading coefficient. nullopt when the backend cannot represent such a
/// fixed point or c. Throws PreconditionError when deg P <= 1.
std::optional<Normalization> normalize_unipoly(const UniPoly& p);

/// The top coefficient Q_m of q in x_var must satisfy
///   Q_m^n = a_n^(m-1) * Q_m(P(x1), ..., P(x_nu))
/// for every commuting pair (necessary, not sufficient).
/// Throws PreconditionError when q does not involve x_var or deg P < 1.
bool leading_coeff_equation_check(const UniPoly& p, const MultiPoly& q, std::size_t var);

struct RootProfile {
  std::vector<RootMultiplicity> entries;
  Scalar leading;
  /// Multiplicities add up to the degree.
  bool complete = false;

  std::size_t distinct() const { return entries.size(); }
  /// leading * prod (y - r)^m(r)
  UniPoly expand() const;
};

/// Throws PreconditionError when deg u < 1.
RootProfile root_profile(const UniPoly& u);

/// A profile with a single distinct root r0 forces P(y) = (y - r0)^n + r0;
/// several distinct roots admit no P. Throws PreconditionError when n <= 1
/// or the profile is incomplete.
std::optional<UniPoly> deduce_p_from_root_map(const RootProfile& profile, unsigned n);

/// Q(x1^n, ..., x_nu^n) == Q(x1, ..., x_nu)^n. Throws when n <= 1.
bool check_power_equation(const MultiPoly& q, unsigned n);

/// Audit of the power equation's solution structure: a solution must be
/// homogeneous, a single term, and its coefficient an (n-1)-th root of unity.
struct MonomialAudit {
  bool satisfies_power_equation = false;
  std::size_t nonzero_homogeneous_parts = 0;
  std::optional<Monomial> monomial;
  bool coefficient_is_root_of_unity = false;
  /// Satisfies the equation without the expected structure.
  bool violation = false;
};

/// Throws PreconditionError when n <= 1 or q is constant.
MonomialAudit monomial_theorem_check(const MultiPoly& q, unsigned n);

/// Every variable q involves has a nonconstant top coefficient. Requires a
/// commuting pair with deg P > 1 and nondegenerate q; throws
/// PreconditionError otherwise.
bool check_leading_nonconstant(const UniPoly& p, const MultiPoly& q);

enum class Verdict {
  normal_form,
  not_commuting,
  degenerate_single_variable,
  degree_one_p,
  constant_q,
  exact_backend_insufficient,
};

/// "NormalForm", "NotCommuting", ...
std::string_view to_string(Verdict verdict);

struct NormalForm {
  AffineMap lambda;
  unsigned n;
  MultiIndex alpha;
  Scalar c;
};

struct Diagnostic {
  std::string name;
  bool pass;
};

struct ClassificationReport {
  Verdict verdict = Verdict::not_commuting;
  std::optional<NormalForm> normal_form;
  std::optional<MultiPoly> residual;
  std::vector<Diagnostic> diagnostics;

  bool commuting() const { return verdict != Verdict::not_commuting; }
};

/// Decides whether (P, Q) commute and, for deg P > 1 and nondegenerate Q,
/// searches the fixed points of P for an affine map taking the pair to
/// (x^n, c*x^alpha). Degenerate inputs get their own verdicts.
ClassificationReport classify(const UniPoly& p, const MultiPoly& q);

/// Recomputes the claims of a report from scratch.
bool reverify(const ClassificationReport& report, const UniPoly& p, const MultiPoly& q);

}  // namespace polycommute
