#include <doctest.h>

#include <algorithm>
#include <set>

#include "polycommute/search.hpp"
#include "test_support.hpp"

using namespace polycommute;
using testing::poly;
using testing::uni;

namespace {

SearchSpec grid_spec(std::size_t arity, unsigned degree, std::vector<long> values, unsigned workers = 1) {
  SearchSpec spec;
  spec.arity = arity;
  spec.max_total_degree = degree;
  for (long v : values) spec.grid.push_back(Scalar(v));
  spec.workers = workers;
  return spec;
}

std::set<std::string> texts(const std::vector<MultiPoly>& polys) {
  std::set<std::string> out;
  for (const auto& p : polys) out.insert(format_poly(p));
  return out;
}

/// The library-independent oracle over the same candidate space.
std::set<std::string> oracle_commuting(const std::vector<long>& p, const SearchSpec& spec,
                                       const std::vector<long>& grid) {
  const auto monomials = monomials_up_to(spec.arity, spec.max_total_degree);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < monomials.size(); ++i) total *= grid.size();
  std::set<std::string> out;
  for (std::uint64_t index = 0; index < total; ++index) {
    testing::IntPoly q;
    MultiPoly as_poly(spec.arity);
    std::uint64_t rest = index;
    for (const auto& m : monomials) {
      const long c = grid[rest % grid.size()];
      rest /= grid.size();
      if (c == 0) continue;
      q.terms.push_back({std::vector<unsigned>(m.exponents().begin(), m.exponents().end()), c});
      as_poly += MultiPoly::monomial(Scalar(c), m);
    }
    if (testing::oracle_commutes(p, q, spec.arity)) out.insert(format_poly(as_poly));
  }
  return out;
}

}  // namespace

TEST_CASE("candidate counts") {
  CHECK(enumerate_candidates(grid_spec(2, 1, {0, 1})).size() == 8);
  CHECK(enumerate_candidates(grid_spec(2, 2, {-1, 0, 1})).size() == 729);
  const auto zero = enumerate_candidates(grid_spec(3, 2, {0}));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_zero());
  CHECK(monomials_up_to(2, 2).size() == 6);
  CHECK(monomials_up_to(3, 3).size() == 20);
}

TEST_CASE("every assignment appears exactly once") {
  const auto all = enumerate_candidates(grid_spec(2, 2, {-1, 0, 1}));
  CHECK(texts(all).size() == 729);
}

TEST_CASE("budget and grid preconditions") {
  SearchSpec spec = grid_spec(2, 3, {-1, 0, 1});
  spec.budget = 1000;
  CHECK_THROWS_AS(CandidateSpace{spec}, BudgetExceeded);
  CHECK_THROWS_AS(CandidateSpace{grid_spec(2, 1, {})}, PreconditionError);
  SearchSpec huge = grid_spec(4, 8, {-1, 0, 1});
  CHECK_THROWS_AS(CandidateSpace{huge}, BudgetExceeded);
  CHECK_THROWS_AS(exhaustive_search(uni("x + 1"), grid_spec(2, 1, {0, 1})), PreconditionError);
}

TEST_CASE("exhaustive search for x^2 matches the oracle") {
  const SearchSpec spec = grid_spec(2, 2, {-1, 0, 1});
  const VerificationSummary s = exhaustive_search(uni("x^2"), spec);
  CHECK(s.total_candidates == 729);
  CHECK(s.violations.empty());
  const std::set<std::string> expected{"0", "1", "x1", "x2", "x1^2", "x2^2", "x1*x2"};
  CHECK(texts(s.commuting_set()) == expected);
  CHECK(oracle_commuting({0, 0, 1}, spec, {-1, 0, 1}) == expected);
  CHECK(s.count(Bucket::constant) == 2);
  CHECK(s.count(Bucket::single_variable) == 4);
  CHECK(s.count(Bucket::nondegenerate) == 1);
}

TEST_CASE("exhaustive search on the two-valued linear grid") {
  const VerificationSummary s = exhaustive_search(uni("x^2"), grid_spec(2, 1, {0, 1}));
  CHECK(texts(s.commuting_set()) == std::set<std::string>{"0", "1", "x1", "x2"});
}

TEST_CASE("exhaustive search for x^2 + 2x") {
  const SearchSpec spec = grid_spec(2, 2, {-1, 0, 1});
  const VerificationSummary s = exhaustive_search(uni("x^2 + 2*x"), spec);
  CHECK(s.violations.empty());
  const auto found = texts(s.commuting_set());
  CHECK(found == oracle_commuting({0, 2, 1}, spec, {-1, 0, 1}));
  CHECK(found.count("x1*x2 + x1 + x2") == 1);
  for (const auto& entry : s.commuting) {
    if (entry.bucket != Bucket::nondegenerate) continue;
    REQUIRE(entry.report.verdict == Verdict::normal_form);
    CHECK(entry.report.normal_form->lambda == AffineMap(Scalar(1), Scalar(1)));
  }
}

TEST_CASE("oracle and classifier agree candidate by candidate") {
  const auto candidates = enumerate_candidates(grid_spec(2, 2, {-1, 0, 1}));
  const UniPoly p = uni("x^2");
  for (const auto& q : candidates) {
    const bool residual_zero = commutator_residual(p, q).is_zero();
    const Verdict v = classify(p, q).verdict;
    const bool classifier_commuting =
        v == Verdict::normal_form || v == Verdict::degenerate_single_variable || v == Verdict::constant_q;
    CHECK(residual_zero == classifier_commuting);
  }
}

TEST_CASE("results do not depend on the worker count") {
  const auto serial = exhaustive_search(uni("x^2 + 2*x"), grid_spec(2, 2, {-1, 0, 1}, 1));
  for (unsigned workers : {2U, 3U, 7U}) {
    const auto parallel = exhaustive_search(uni("x^2 + 2*x"), grid_spec(2, 2, {-1, 0, 1}, workers));
    REQUIRE(parallel.commuting.size() == serial.commuting.size());
    for (std::size_t i = 0; i < serial.commuting.size(); ++i) {
      CHECK(parallel.commuting[i].index == serial.commuting[i].index);
      CHECK(parallel.commuting[i].q == serial.commuting[i].q);
      CHECK(parallel.commuting[i].report.verdict == serial.commuting[i].report.verdict);
    }
    CHECK(parallel.violations.size() == serial.violations.size());
  }
}

TEST_CASE("enlarging the search never loses a commuter") {
  const UniPoly p = uni("x^2");
  const auto small = texts(exhaustive_search(p, grid_spec(2, 1, {0, 1})).commuting_set());
  const auto wider = texts(exhaustive_search(p, grid_spec(2, 1, {-1, 0, 1})).commuting_set());
  const auto deeper = texts(exhaustive_search(p, grid_spec(2, 2, {-1, 0, 1})).commuting_set());
  CHECK(std::includes(wider.begin(), wider.end(), small.begin(), small.end()));
  CHECK(std::includes(deeper.begin(), deeper.end(), wider.begin(), wider.end()));
}

TEST_CASE("perturbation probe") {
  const auto results = perturbation_probe(uni("x^2"), poly("x1*x2", 2),
                                          {poly("x1", 2), MultiPoly(2), poly("x1*x2", 2)});
  REQUIRE(results.size() == 3);
  CHECK_FALSE(results[0].commutes);
  CHECK(results[1].commutes);
  CHECK_FALSE(results[2].commutes);
  CHECK_THROWS_AS(perturbation_probe(uni("x^2"), poly("x1 + x2", 2), {}), PreconditionError);
}

TEST_CASE("power equation census") {
  const SearchSpec spec = grid_spec(2, 2, {-1, 0, 1});
  VerificationSummary s = power_equation_census(2, spec);
  CHECK(s.violations.empty());
  CHECK(texts(s.commuting_set()) == std::set<std::string>{"0", "1", "x1", "x2", "x1^2", "x1*x2", "x2^2"});

  s = power_equation_census(3, spec);
  CHECK(s.violations.empty());
  const auto found = texts(s.commuting_set());
  CHECK(found.count("-x1*x2") == 1);
  CHECK(found.size() == 13);

  s = power_equation_census(2, grid_spec(2, 2, {0}));
  CHECK(texts(s.commuting_set()) == std::set<std::string>{"0"});
  CHECK_THROWS_AS(power_equation_census(1, spec), PreconditionError);
}
