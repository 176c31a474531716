#include "polycommute/search.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace polycommute {

namespace {

struct CandidateOutcome {
  std::optional<CommutingEntry> entry;
  std::vector<Violation> violations;
};

using Inspector = std::function<CandidateOutcome(std::uint64_t, const MultiPoly&)>;

/// Splits [0, size) into contiguous chunks, one per worker, and merges the
/// per-chunk results in index order.
VerificationSummary run_chunked(const CandidateSpace& space, unsigned workers,
                                const Inspector& inspect) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t size = space.size();
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, size));
  std::vector<VerificationSummary> partial(chunks);

  auto work = [&](std::uint64_t chunk) {
    const std::uint64_t begin = size * chunk / chunks;
    const std::uint64_t end = size * (chunk + 1) / chunks;
    auto& out = partial[chunk];
    for (std::uint64_t i = begin; i < end; ++i) {
      CandidateOutcome outcome = inspect(i, space.at(i));
      if (outcome.entry) out.commuting.push_back(std::move(*outcome.entry));
      for (auto& v : outcome.violations) out.violations.push_back(std::move(v));
    }
  };

  if (chunks == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) threads.emplace_back(work, c);
  }

  VerificationSummary summary;
  summary.total_candidates = size;
  for (auto& part : partial) {
    std::move(part.commuting.begin(), part.commuting.end(), std::back_inserter(summary.commuting));
    std::move(part.violations.begin(), part.violations.end(), std::back_inserter(summary.violations));
  }
  summary.wall_time = std::chrono::steady_clock::now() - start;
  return summary;
}

bool is_root_of_unity(const Scalar& c, unsigned n) { return c.pow(n - 1).is_one(); }

}  // namespace

std::vector<MultiIndex> monomials_up_to(std::size_t arity, unsigned max_degree) {
  std::vector<MultiIndex> result;
  for (unsigned total = 0; total <= max_degree; ++total) {
    std::vector<MultiIndex> level;
    MultiIndex current(arity);
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t var, unsigned remaining) {
      if (var + 1 == arity) {
        current[var] = remaining;
        level.push_back(current);
        return;
      }
      for (unsigned e = remaining + 1; e-- > 0;) {
        current[var] = e;
        fill(var + 1, remaining - e);
      }
    };
    fill(0, total);
    result.insert(result.end(), level.begin(), level.end());
  }
  return result;
}

CandidateSpace::CandidateSpace(const SearchSpec& spec)
    : arity_(spec.arity), monomials_(monomials_up_to(spec.arity, spec.max_total_degree)), grid_(spec.grid) {
  if (grid_.empty()) throw PreconditionError("search grid must not be empty");
  for (const auto& value : grid_) {
    if (!value.is_exact()) throw PreconditionError("search grids must be exact");
  }
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (count > spec.budget / grid_.size()) {
      throw BudgetExceeded("candidate count exceeds the budget of " + std::to_string(spec.budget));
    }
    count *= grid_.size();
  }
  if (count > spec.budget) {
    throw BudgetExceeded("candidate count exceeds the budget of " + std::to_string(spec.budget));
  }
  size_ = count;
}

MultiPoly CandidateSpace::at(std::uint64_t index) const {
  std::vector<std::pair<MultiIndex, Scalar>> terms;
  terms.reserve(monomials_.size());
  for (const auto& monomial : monomials_) {
    terms.emplace_back(monomial, grid_[index % grid_.size()]);
    index /= grid_.size();
  }
  return MultiPoly::from_terms(arity_, terms);
}

std::vector<MultiPoly> enumerate_candidates(const SearchSpec& spec) {
  const CandidateSpace space(spec);
  std::vector<MultiPoly> result;
  result.reserve(space.size());
  for (std::uint64_t i = 0; i < space.size(); ++i) result.push_back(space.at(i));
  return result;
}

std::string_view to_string(Bucket bucket) {
  switch (bucket) {
    case Bucket::constant: return "constant";
    case Bucket::single_variable: return "single_variable";
    case Bucket::nondegenerate: return "nondegenerate";
  }
  return "unknown";
}

Bucket bucket_of(const MultiPoly& q) {
  if (q.is_constant()) return Bucket::constant;
  return check_nondegeneracy(q) ? Bucket::nondegenerate : Bucket::single_variable;
}

std::vector<MultiPoly> VerificationSummary::commuting_set() const {
  std::vector<MultiPoly> result;
  for (const auto& entry : commuting) result.push_back(entry.q);
  return result;
}

std::size_t VerificationSummary::count(Bucket bucket) const {
  return static_cast<std::size_t>(std::count_if(commuting.begin(), commuting.end(),
                                                [bucket](const auto& e) { return e.bucket == bucket; }));
}

VerificationSummary exhaustive_search(const UniPoly& p, const SearchSpec& spec) {
  if (p.degree() <= Degree(1)) throw PreconditionError("exhaustive search needs deg P > 1");
  const CandidateSpace space(spec);
  const unsigned n = static_cast<unsigned>(p.degree().value());
  const bool pure_power = p.poly().as_monomial().has_value();

  return run_chunked(space, spec.workers, [&](std::uint64_t index, const MultiPoly& q) {
    CandidateOutcome outcome;
    if (!commutes(p, q)) return outcome;
    const Bucket bucket = bucket_of(q);
    ClassificationReport report = classify(p, q);
    auto flag = [&](std::string reason) { outcome.violations.push_back({index, q, std::move(reason)}); };

    if (!report.commuting()) flag("classifier disagrees with the residual oracle");
    switch (bucket) {
      case Bucket::constant:
        if (!(p(q.constant_term()) == q.constant_term())) flag("constant commuter is not a fixed point of P");
        break;
      case Bucket::single_variable:
        if (pure_power) {
          const auto monomial = q.as_monomial();
          if (!monomial || !is_root_of_unity(monomial->coefficient, n)) {
            flag("single-variable commuter of a pure power is not a unit monomial");
          }
        }
        break;
      case Bucket::nondegenerate:
        if (report.verdict != Verdict::normal_form) {
          flag("nondegenerate commuter classified as " + std::string(to_string(report.verdict)));
        } else if (!reverify(report, p, q)) {
          flag("normal form fails re-verification");
        }
        break;
    }
    outcome.entry = CommutingEntry{index, q, bucket, std::move(report)};
    return outcome;
  });
}

std::vector<PerturbationResult> perturbation_probe(const UniPoly& p, const MultiPoly& q,
                                                   const std::vector<MultiPoly>& deltas) {
  if (!commutes(p, q)) throw PreconditionError("perturbation probe needs a commuting pair");
  std::vector<PerturbationResult> result;
  result.reserve(deltas.size());
  for (const auto& delta : deltas) result.push_back({delta, commutes(p, q + delta)});
  return result;
}

VerificationSummary power_equation_census(unsigned n, const SearchSpec& spec) {
  if (n <= 1) throw PreconditionError("power equation census needs n > 1");
  const CandidateSpace space(spec);
  const UniPoly power = UniPoly::power(n);

  return run_chunked(space, spec.workers, [&](std::uint64_t index, const MultiPoly& q) {
    CandidateOutcome outcome;
    if (!check_power_equation(q, n)) return outcome;
    auto flag = [&](std::string reason) { outcome.violations.push_back({index, q, std::move(reason)}); };
    if (!q.is_constant()) {
      const MonomialAudit audit = monomial_theorem_check(q, n);
      if (audit.violation) flag("nonconstant solution is not a unit monomial");
    }
    if (!q.constant_term().is_zero() && !q.is_constant()) flag("solution with a constant term is not constant");
    outcome.entry = CommutingEntry{index, q, bucket_of(q), classify(power, q)};
    return outcome;
  });
}

}  // namespace polycommute
