#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycommute/analyzer.hpp"

namespace polycommute {

struct SearchSpec {
  std::size_t arity = 2;
  unsigned max_total_degree = 2;
  /// Exact coefficient values tried for every monomial.
  std::vector<Scalar> grid;
  unsigned workers = 1;
  /// Refuse to run when the candidate count exceeds this.
  std::uint64_t budget = 10'000'000;
};

/// All multi-indices with |alpha| <= max_degree, graded-lex ascending
/// (1, x1, x2, x1^2, x1*x2, x2^2, ... for two variables).
std::vector<MultiIndex> monomials_up_to(std::size_t arity, unsigned max_degree);

/// The |grid|^(#monomials) candidate polynomials, addressable by index.
/// Index digits in base |grid| select the coefficient of each monomial, the
/// first monomial being the least significant digit.
class CandidateSpace {
 public:
  /// Throws PreconditionError on an empty grid or a floating grid value and
  /// BudgetExceeded when the count exceeds spec.budget.
  explicit CandidateSpace(const SearchSpec& spec);

  std::uint64_t size() const noexcept { return size_; }
  MultiPoly at(std::uint64_t index) const;
  const std::vector<MultiIndex>& monomials() const noexcept { return monomials_; }

 private:
  std::size_t arity_;
  std::vector<MultiIndex> monomials_;
  std::vector<Scalar> grid_;
  std::uint64_t size_ = 0;
};

/// Every candidate, in canonical order. Same exceptions as CandidateSpace.
std::vector<MultiPoly> enumerate_candidates(const SearchSpec& spec);

enum class Bucket { constant, single_variable, nondegenerate };
std::string_view to_string(Bucket bucket);
Bucket bucket_of(const MultiPoly& q);

struct CommutingEntry {
  std::uint64_t index;
  MultiPoly q;
  Bucket bucket;
  ClassificationReport report;
};

struct Violation {
  std::uint64_t index;
  MultiPoly q;
  std::string reason;
};

struct VerificationSummary {
  std::uint64_t total_candidates = 0;
  /// Commuting (or power-equation) candidates in enumeration order.
  std::vector<CommutingEntry> commuting;
  std::vector<Violation> violations;
  std::chrono::duration<double> wall_time{0};

  std::vector<MultiPoly> commuting_set() const;
  std::size_t count(Bucket bucket) const;
};

/// Runs the exact residual on every candidate Q and classifies the
/// commuting ones. Violations: a nondegenerate commuter that does not reach
/// NormalForm, a classifier verdict disagreeing with the residual, a constant
/// commuter that is not a fixed point of P, and (for P = c*x^n) a
/// single-variable commuter that is not a monomial c*x_i^k with c^(n-1) = 1.
/// Throws PreconditionError when deg P <= 1.
VerificationSummary exhaustive_search(const UniPoly& p, const SearchSpec& spec);

struct PerturbationResult {
  MultiPoly delta;
  bool commutes;
};

/// Whether (P, Q + delta) still commutes for each delta. Throws
/// PreconditionError unless (P, Q) commutes.
std::vector<PerturbationResult> perturbation_probe(const UniPoly& p, const MultiPoly& q,
                                                   const std::vector<MultiPoly>& deltas);

/// Candidates solving Q(x^n) = Q^n, i.e. commuting with x^n. Violations: a
/// nonconstant survivor that is not a monomial with c^(n-1) = 1, and a
/// survivor with nonzero constant term that is not constant.
VerificationSummary power_equation_census(unsigned n, const SearchSpec& spec);

}  // namespace polycommute
