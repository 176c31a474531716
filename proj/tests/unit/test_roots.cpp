#include <doctest.h>

#include <map>
#include <random>

#include "polycommute/gaussian.hpp"
#include "polycommute/roots.hpp"
#include "test_support.hpp"

using namespace polycommute;
using testing::uni;

TEST_CASE("integer factorization") {
  const auto f = factor_integer(mpz_class(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::make_pair(mpz_class(2), 3U));
  CHECK(f[1] == std::make_pair(mpz_class(3), 2U));
  CHECK(f[2] == std::make_pair(mpz_class(5), 1U));
  // two primes beyond the trial-division range
  const auto g = factor_integer(mpz_class("1000000007") * mpz_class("998244353"));
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == mpz_class("998244353"));
  CHECK(g[1].first == mpz_class("1000000007"));
}

TEST_CASE("gaussian factorization reproduces the input up to a unit") {
  for (const GaussianInt z : {GaussianInt{5, 0}, GaussianInt{3, 4}, GaussianInt{12, -7}, GaussianInt{0, 18},
                              GaussianInt{1, 1}, GaussianInt{-1, 0}}) {
    GaussianInt product{1, 0};
    for (const auto& [prime, e] : factor_gaussian(z)) {
      for (unsigned k = 0; k < e; ++k) product = product * prime;
    }
    CHECK(norm(product) == norm(z));
    CHECK(divides(product, z));
  }
  // 5 = (2+i)(2-i): divisor classes 1, 2+i, 2-i, 5
  CHECK(divisors_up_to_units(GaussianInt{5, 0}).size() == 4);
}

TEST_CASE("gaussian rational roots with multiplicity") {
  auto roots = gaussian_rational_roots(uni("x^2*(x-1)"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].root == Scalar(0));
  CHECK(roots[0].multiplicity == 2);
  CHECK(roots[1].root == Scalar(1));
  CHECK(roots[1].multiplicity == 1);

  roots = gaussian_rational_roots(uni("(x+1)^3"));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].root == Scalar(-1));
  CHECK(roots[0].multiplicity == 3);

  roots = gaussian_rational_roots(uni("x^2 + 1"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].root == -Scalar::imaginary_unit());
  CHECK(roots[1].root == Scalar::imaginary_unit());

  roots = gaussian_rational_roots(uni("(3*x - 2)^2*(2*x + 5*i)*(x^2 - 2)"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].root == Scalar(mpq_class(0), mpq_class(-5, 2)));
  CHECK(roots[1].root == Scalar(mpq_class(2, 3)));
  CHECK(roots[1].multiplicity == 2);

  CHECK(gaussian_rational_roots(uni("x^2 - 2")).empty());
  CHECK_THROWS_AS(gaussian_rational_roots(UniPoly()), PreconditionError);
}

TEST_CASE("numeric roots cluster multiple roots") {
  const auto roots = numeric_roots(UniPoly(uni("(x - 1/3)^3*(x^2 - 2)").poly().to_floating()));
  REQUIRE(roots.size() == 3);
  const BigFloat sqrt2 = sqrt(BigFloat(2));
  CHECK(roots[0].root == Scalar::floating(-sqrt2, 0));
  CHECK(roots[0].multiplicity == 1);
  CHECK(roots[1].root == Scalar(mpq_class(1, 3)).to_floating());
  CHECK(roots[1].multiplicity == 3);
  CHECK(roots[2].root == Scalar::floating(sqrt2, 0));
}

TEST_CASE("deflation divides out a linear factor") {
  CHECK(deflate(uni("x^3 - 1"), Scalar(1)) == uni("x^2 + x + 1"));
}

TEST_CASE("planted gaussian rational roots are recovered exactly") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    std::map<Scalar, unsigned, CanonicalLess> planted;
    UniPoly poly = UniPoly::power(0, testing::random_rational(rng, true));
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k) {
      mpq_class re(num(rng), den(rng)), im(rng() % 2 ? num(rng) : 0, den(rng));
      re.canonicalize();
      im.canonicalize();
      const Scalar root(re, im);
      const unsigned multiplicity = 1 + static_cast<unsigned>(rng() % 3);
      planted[root] += multiplicity;
      for (unsigned m = 0; m < multiplicity; ++m) poly = poly * UniPoly::from_coefficients({-root, Scalar(1)});
    }
    // an irreducible factor without Gaussian rational roots
    if (rng() % 2) poly = poly * uni("x^2 - 3");
    const auto roots = gaussian_rational_roots(poly);
    REQUIRE(roots.size() == planted.size());
    std::size_t i = 0;
    for (const auto& [root, multiplicity] : planted) {
      CHECK(roots[i].root == root);
      CHECK(roots[i].multiplicity == multiplicity);
      ++i;
    }
  }
}
