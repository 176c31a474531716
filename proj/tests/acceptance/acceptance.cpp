// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "polycommute/analyzer.hpp"
#include "polycommute/expression.hpp"
#include "polycommute/search.hpp"
#include "test_support.hpp"

using namespace polycommute;

namespace {

struct Pair {
  UniPoly p;
  MultiPoly q;
};

/// Collects the first few failures of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) detail_ << "\n    " << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ << " checks, " << failures_ << " failed" << detail_.str();
    return s.str();
  }

 private:
  std::size_t count_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream detail_;
};

std::string describe(const Pair& pair) { return "P = " + format_poly(pair.p) + ", Q = " + format_poly(pair.q); }

const std::vector<Scalar>& units() {
  static const std::vector<Scalar> values{Scalar(1), Scalar(-1), Scalar(0, 1), Scalar(0, -1)};
  return values;
}

std::vector<MultiIndex> exponents_between(std::size_t arity, unsigned low, unsigned high) {
  std::vector<MultiIndex> result;
  for (const auto& alpha : monomials_up_to(arity, high)) {
    if (alpha.total() >= low) result.push_back(alpha);
  }
  return result;
}

/// (x^n, c*x^alpha) with n in 2..5, nu in {2, 3}, 1 <= |alpha| <= 4 and
/// c a Gaussian unit with c^(n-1) = 1.
std::vector<Pair> monomial_pairs() {
  std::vector<Pair> pairs;
  for (unsigned n = 2; n <= 5; ++n) {
    for (std::size_t nu : {2U, 3U}) {
      for (const auto& alpha : exponents_between(nu, 1, 4)) {
        for (const auto& c : units()) {
          if (c.pow(n - 1).is_one()) pairs.push_back({UniPoly::power(n), MultiPoly::monomial(c, alpha)});
        }
      }
    }
  }
  return pairs;
}

/// Pairs that fail to commute: a wrong coefficient or an added constant.
std::vector<Pair> non_commuting_pairs(std::mt19937_64& rng, std::size_t count) {
  const auto base = monomial_pairs();
  std::vector<Pair> pairs;
  while (pairs.size() < count) {
    Pair pair = base[rng() % base.size()];
    if (rng() % 2 == 0) {
      pair.q = pair.q.scaled(Scalar(2 + static_cast<long>(rng() % 3)));
    } else {
      pair.q += MultiPoly::constant(pair.q.arity(), Scalar(1 + static_cast<long>(rng() % 3)));
    }
    pairs.push_back(pair);
  }
  return pairs;
}

Pair conjugate(const AffineMap& map, const Pair& pair) {
  return {affine_conjugate(map, pair.p), affine_conjugate(map, pair.q)};
}

std::vector<Pair> conjugated_pairs(std::mt19937_64& rng, std::size_t count) {
  std::vector<Pair> nondegenerate;
  for (const auto& pair : monomial_pairs()) {
    if (check_nondegeneracy(pair.q)) nondegenerate.push_back(pair);
  }
  std::vector<Pair> result;
  for (std::size_t k = 0; k < count; ++k) {
    result.push_back(conjugate(testing::random_affine(rng), nondegenerate[rng() % nondegenerate.size()]));
  }
  return result;
}

SearchSpec small_grid(unsigned degree) {
  SearchSpec spec;
  spec.arity = 2;
  spec.max_total_degree = degree;
  spec.grid = {Scalar(-1), Scalar(0), Scalar(1)};
  spec.workers = std::max(1U, std::thread::hardware_concurrency());
  return spec;
}

std::set<std::string> texts(const std::vector<MultiPoly>& polys) {
  std::set<std::string> out;
  for (const auto& q : polys) out.insert(format_poly(q));
  return out;
}

testing::IntPoly to_int_poly(const MultiPoly& q) {
  testing::IntPoly result;
  for (const auto& [alpha, c] : q.terms()) {
    result.terms.push_back({std::vector<unsigned>(alpha.exponents().begin(), alpha.exponents().end()),
                            c.real().get_num().get_si()});
  }
  return result;
}

/// Commuting set of P over the candidate space, decided by the integer
/// oracle alone.
std::set<std::string> oracle_commuting_set(const std::vector<long>& p, const SearchSpec& spec) {
  std::set<std::string> out;
  for (const auto& q : enumerate_candidates(spec)) {
    if (testing::oracle_commutes(p, to_int_poly(q), spec.arity)) out.insert(format_poly(q));
  }
  return out;
}

// Pairs gathered by criteria 1-4 for the leading coefficient check.
std::vector<Pair> g_commuting_pairs;

void criterion_monomials(Check& check) {
  const auto pairs = monomial_pairs();
  for (const auto& pair : pairs) {
    check.expect(commutator_residual(pair.p, pair.q).is_zero(), describe(pair));
    g_commuting_pairs.push_back(pair);
  }
  // 48 exponents; 1, 2, 1 and 4 admissible units for n = 2, 3, 4, 5
  check.expect(pairs.size() == 48 * 8, "pair count " + std::to_string(pairs.size()));
}

void criterion_affine_invariance(Check& check) {
  std::mt19937_64 rng(1);
  const auto commuting = monomial_pairs();
  for (int k = 0; k < 200; ++k) {
    const Pair pair = conjugate(testing::random_affine(rng), commuting[rng() % commuting.size()]);
    check.expect(commutator_residual(pair.p, pair.q).is_zero(), "conjugate commutes: " + describe(pair));
  }
  for (const auto& pair : non_commuting_pairs(rng, 200)) {
    check.expect(!commutator_residual(pair.p, pair.q).is_zero(), "base fails: " + describe(pair));
    const Pair moved = conjugate(testing::random_affine(rng), pair);
    check.expect(!commutator_residual(moved.p, moved.q).is_zero(), "conjugate fails: " + describe(moved));
  }
}

void criterion_round_trip(Check& check) {
  std::mt19937_64 rng(2);
  for (const auto& pair : conjugated_pairs(rng, 100)) {
    const ClassificationReport report = classify(pair.p, pair.q);
    g_commuting_pairs.push_back(pair);
    if (report.verdict != Verdict::normal_form) {
      check.expect(false, "verdict " + std::string(to_string(report.verdict)) + ": " + describe(pair));
      continue;
    }
    const NormalForm& nf = *report.normal_form;
    const UniPoly p_back = affine_conjugate(nf.lambda, pair.p);
    const MultiPoly q_back = affine_conjugate(nf.lambda, pair.q);
    const auto monomial = q_back.as_monomial();
    check.expect(p_back == UniPoly::power(nf.n), "P does not return to x^n: " + describe(pair));
    check.expect(monomial && monomial->exponents == nf.alpha && monomial->coefficient == nf.c,
                 "Q does not return to c*x^alpha: " + describe(pair));
    check.expect(nf.c.pow(nf.n - 1).is_one(), "c^(n-1) != 1: " + describe(pair));
  }
}

void criterion_exhaustive(Check& check) {
  const SearchSpec spec = small_grid(2);
  const std::set<std::string> expected{"0", "1", "x1", "x2", "x1^2", "x2^2", "x1*x2"};
  check.expect(oracle_commuting_set({0, 0, 1}, spec) == expected, "oracle set for x^2");

  auto run = [&](const UniPoly& p, const std::vector<long>& coeffs, const SearchSpec& s) {
    const VerificationSummary summary = exhaustive_search(p, s);
    check.expect(summary.violations.empty(), "violations for P = " + format_poly(p));
    check.expect(texts(summary.commuting_set()) == oracle_commuting_set(coeffs, s),
                 "commuting set differs from the oracle for P = " + format_poly(p));
    for (const auto& entry : summary.commuting) {
      g_commuting_pairs.push_back({p, entry.q});
      if (entry.bucket == Bucket::nondegenerate) {
        check.expect(entry.report.verdict == Verdict::normal_form, "not NormalForm: " + format_poly(entry.q));
      }
    }
    return summary;
  };

  const auto start = std::chrono::steady_clock::now();
  const auto square = run(UniPoly::power(2), {0, 0, 1}, spec);
  check.expect(square.total_candidates == 729, "candidate count");
  check.expect(texts(square.commuting_set()) == expected, "commuting set for x^2");
  check.expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(1), "x^2 search took over 1 s");

  const UniPoly shifted = testing::uni("x^2 + 2*x");
  const auto other = run(shifted, {0, 2, 1}, spec);
  check.expect(texts(other.commuting_set()).count("x1*x2 + x1 + x2") == 1, "x1*x2 + x1 + x2 missing");

  const auto census_start = std::chrono::steady_clock::now();
  const VerificationSummary full = exhaustive_search(UniPoly::power(2), small_grid(3));
  const auto elapsed = std::chrono::steady_clock::now() - census_start;
  check.expect(full.total_candidates == 59049, "degree 3 candidate count");
  check.expect(full.violations.empty(), "violations in the degree 3 search");
  check.expect(elapsed < std::chrono::seconds(60), "degree 3 search took over 60 s");
  for (const auto& entry : full.commuting) {
    if (entry.bucket == Bucket::nondegenerate) {
      check.expect(entry.report.verdict == Verdict::normal_form, "not NormalForm: " + format_poly(entry.q));
    }
  }
}

void criterion_census(Check& check) {
  for (unsigned n : {2U, 3U}) {
    const VerificationSummary summary = power_equation_census(n, small_grid(2));
    check.expect(summary.violations.empty(), "census violations for n = " + std::to_string(n));
    for (const auto& q : summary.commuting_set()) {
      if (q.is_constant()) continue;
      const auto monomial = q.as_monomial();
      check.expect(monomial && monomial->coefficient.pow(n - 1).is_one(),
                   "survivor is not a unit monomial: " + format_poly(q));
    }
    if (n == 3) check.expect(texts(summary.commuting_set()).count("-x1*x2") == 1, "-x1*x2 missing for n = 3");
  }
}

void criterion_leading_coefficient(Check& check) {
  for (const auto& pair : g_commuting_pairs) {
    if (pair.p.degree() < Degree(1)) continue;
    for (std::size_t var = 0; var < pair.q.arity(); ++var) {
      if (!pair.q.depends_on(var)) continue;
      check.expect(leading_coeff_equation_check(pair.p, pair.q, var),
                   "equation fails in x" + std::to_string(var + 1) + ": " + describe(pair));
    }
  }
  const UniPoly p = UniPoly::power(2);
  const MultiPoly witness = testing::poly("x1*x2 + x2^2", 2);
  check.expect(leading_coeff_equation_check(p, witness, 0), "witness check in x1");
  check.expect(leading_coeff_equation_check(p, witness, 1), "witness check in x2");
  check.expect(!commutator_residual(p, witness).is_zero(), "witness commutes");
}

void criterion_perturbation(Check& check) {
  for (unsigned n : {2U, 3U}) {
    const UniPoly p = UniPoly::power(n);
    for (std::size_t nu : {2U, 3U}) {
      const auto exponents = exponents_between(nu, 0, 3);
      for (const auto& alpha : exponents_between(nu, 1, 3)) {
        for (const auto& c : units()) {
          if (!c.pow(n - 1).is_one()) continue;
          const MultiPoly q = MultiPoly::monomial(c, alpha);
          check.expect(commutes(p, q), "base pair fails to commute");
          std::vector<MultiPoly> deltas{q};
          for (const auto& beta : exponents) {
            if (beta == alpha) continue;
            for (long t : {1L, 2L}) deltas.push_back(MultiPoly::monomial(Scalar(t), beta));
          }
          for (const auto& result : perturbation_probe(p, q, deltas)) {
            check.expect(!result.commutes, "perturbation commutes: " + format_poly(q + result.delta));
          }
        }
      }
    }
  }
}

void criterion_kernel(Check& check) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    const std::size_t arity = 1 + rng() % 3;
    const MultiPoly q = testing::random_poly(rng, arity, 4, 5);
    for (std::size_t var = 0; var < arity; ++var) {
      const auto parts = coeff_polys_in(q, var);
      MultiPoly rebuilt(arity);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        rebuilt += parts[i] * MultiPoly::monomial(Scalar(1), MultiIndex::unit(arity, var, static_cast<unsigned>(i)));
      }
      check.expect(rebuilt == q, "coeff_polys_in: " + format_poly(q));
      check.expect(split_fgq(q, var).reassemble() == q, "split_fgq: " + format_poly(q));
    }
    check.expect(homogeneous_parts(q).sum(arity) == q, "homogeneous_parts: " + format_poly(q));

    const MultiPoly p_poly = testing::random_poly(rng, 1, 3, 4);
    if (p_poly.total_degree() < Degree(1) || q.total_degree() < Degree(1)) continue;
    const UniPoly p(p_poly);
    const long dp = p.degree().value();
    check.expect(compose_outer(p, q).total_degree() == q.total_degree() * dp, "degree law for P(Q)");
    check.expect(compose_each(q, p).total_degree() == q.total_degree() * dp, "degree law for Q(P)");
  }
  for (int k = 0; k < 500; ++k) {
    const std::size_t arity = 1 + rng() % 4;
    const MultiPoly q = testing::random_poly(rng, arity, 1 + rng() % 8, 6);
    const std::string text = format_poly(q);
    check.expect(parse_poly(text, arity) == q, "parse(format(q)) != q for " + text);
  }
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<void(Check&)> run;
    double time_limit;
  };
  const std::vector<Criterion> criteria{
      {"monomial commutation suite", criterion_monomials, 5},
      {"affine invariance", criterion_affine_invariance, 120},
      {"classification round trip", criterion_round_trip, 30},
      {"exhaustive search against the oracle", criterion_exhaustive, 120},
      {"power equation census", criterion_census, 120},
      {"leading coefficient equation", criterion_leading_coefficient, 120},
      {"perturbation negative space", criterion_perturbation, 120},
      {"kernel and parser properties", criterion_kernel, 120},
  };
  const auto suite_start = std::chrono::steady_clock::now();
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    check.expect(elapsed.count() < criteria[i].time_limit,
                 "took longer than " + std::to_string(criteria[i].time_limit) + " s");
    all = all && check.ok();
    std::printf("%s criterion %zu (%s): %s [%.2f s]\n", check.ok() ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), check.summary().c_str(), elapsed.count());
  }
  const std::chrono::duration<double> total = std::chrono::steady_clock::now() - suite_start;
  const bool in_time = total.count() < 120.0;
  std::printf("suite time %.2f s%s\n", total.count(), in_time ? "" : " (over 120 s)");
  return all && in_time ? 0 : 1;
}
