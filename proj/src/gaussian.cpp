#include "polycommute/gaussian.hpp"

#include <algorithm>
#include <stdexcept>

namespace polycommute {

namespace {

mpz_class round_div(const mpz_class& num, const mpz_class& den) {
  // nearest integer to num/den for den > 0
  mpz_class twice = 2 * num + den;
  mpz_class result;
  mpz_fdiv_q(result.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
  return result;
}

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    const mpz_class cc = c;
    auto step = [&](const mpz_class& v) {
      mpz_class r = v * v + cc;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    unsigned long r = 1;
    const unsigned long m = 64;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          mpz_class diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_factors(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    out.push_back(n);
    return;
  }
  const mpz_class d = pollard_brent(n);
  collect_factors(d, out);
  collect_factors(mpz_class(n / d), out);
}

// a + b*i with a^2 + b^2 = p for a prime p = 1 mod 4
GaussianInt split_prime(const mpz_class& p) {
  const mpz_class exponent = (p - 1) / 4;
  for (unsigned long c = 2;; ++c) {
    mpz_class t;
    mpz_class base = c;
    mpz_powm(t.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
    mpz_class sq = t * t + 1;
    if (mpz_divisible_p(sq.get_mpz_t(), p.get_mpz_t()) != 0) {
      return gaussian_gcd(GaussianInt{p, 0}, GaussianInt{t, 1});
    }
  }
}

}  // namespace

GaussianInt operator*(const GaussianInt& lhs, const GaussianInt& rhs) {
  return {lhs.re * rhs.re - lhs.im * rhs.im, lhs.re * rhs.im + lhs.im * rhs.re};
}

mpz_class norm(const GaussianInt& z) { return z.re * z.re + z.im * z.im; }

bool is_zero(const GaussianInt& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

bool divides(const GaussianInt& divisor, const GaussianInt& z, GaussianInt* quotient) {
  const mpz_class n = norm(divisor);
  if (n == 0) return is_zero(z);
  const GaussianInt scaled = z * GaussianInt{divisor.re, -divisor.im};
  if (mpz_divisible_p(scaled.re.get_mpz_t(), n.get_mpz_t()) == 0 ||
      mpz_divisible_p(scaled.im.get_mpz_t(), n.get_mpz_t()) == 0) {
    return false;
  }
  if (quotient != nullptr) {
    quotient->re = scaled.re / n;
    quotient->im = scaled.im / n;
  }
  return true;
}

GaussianInt gaussian_gcd(GaussianInt a, GaussianInt b) {
  while (!is_zero(b)) {
    const mpz_class n = norm(b);
    const GaussianInt scaled = a * GaussianInt{b.re, -b.im};
    const GaussianInt q{round_div(scaled.re, n), round_div(scaled.im, n)};
    const GaussianInt qb = q * b;
    GaussianInt r{a.re - qb.re, a.im - qb.im};
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
  if (n <= 0) throw std::invalid_argument("factor_integer expects a positive integer");
  std::vector<std::pair<mpz_class, unsigned>> result;
  auto take = [&](const mpz_class& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
      n /= p;
      ++e;
    }
    if (e != 0) result.emplace_back(p, e);
  };
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) take(mpz_class(p));
  std::vector<mpz_class> large;
  collect_factors(n, large);
  std::sort(large.begin(), large.end());
  for (std::size_t i = 0; i < large.size();) {
    std::size_t j = i;
    while (j < large.size() && large[j] == large[i]) ++j;
    result.emplace_back(large[i], static_cast<unsigned>(j - i));
    i = j;
  }
  return result;
}

std::vector<std::pair<GaussianInt, unsigned>> factor_gaussian(const GaussianInt& z) {
  if (is_zero(z)) throw std::invalid_argument("cannot factor zero");
  std::vector<std::pair<GaussianInt, unsigned>> result;
  GaussianInt rest = z;
  auto strip = [&](const GaussianInt& prime) {
    unsigned e = 0;
    GaussianInt q;
    while (divides(prime, rest, &q)) {
      rest = q;
      ++e;
    }
    if (e != 0) result.emplace_back(prime, e);
  };
  for (const auto& [p, exponent] : factor_integer(norm(z))) {
    if (p == 2) {
      strip(GaussianInt{1, 1});
    } else if (mpz_class(p % 4) == 3) {
      strip(GaussianInt{p, 0});
    } else {
      const GaussianInt pi = split_prime(p);
      strip(pi);
      strip(GaussianInt{pi.re, -pi.im});
    }
  }
  return result;
}

std::vector<GaussianInt> divisors_up_to_units(const GaussianInt& z) {
  std::vector<GaussianInt> divisors{GaussianInt{1, 0}};
  for (const auto& [prime, exponent] : factor_gaussian(z)) {
    const std::size_t existing = divisors.size();
    GaussianInt power{1, 0};
    for (unsigned e = 1; e <= exponent; ++e) {
      power = power * prime;
      for (std::size_t i = 0; i < existing; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  return divisors;
}

const std::vector<GaussianInt>& gaussian_units() {
  static const std::vector<GaussianInt> units{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return units;
}

}  // namespace polycommute
