#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace polycommute {

/// Element re + im*i of Z[i].
struct GaussianInt {
  mpz_class re;
  mpz_class im;

  friend bool operator==(const GaussianInt& lhs, const GaussianInt& rhs) {
    return lhs.re == rhs.re && lhs.im == rhs.im;
  }
};

GaussianInt operator*(const GaussianInt& lhs, const GaussianInt& rhs);
mpz_class norm(const GaussianInt& z);
bool is_zero(const GaussianInt& z);
/// lhs / rhs when the division is exact in Z[i].
bool divides(const GaussianInt& divisor, const GaussianInt& z, GaussianInt* quotient = nullptr);
GaussianInt gaussian_gcd(GaussianInt a, GaussianInt b);

/// Prime factorization of n > 0 as (prime, exponent), primes ascending.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n);

/// Factorization of a nonzero z into Gaussian primes, up to a unit.
std::vector<std::pair<GaussianInt, unsigned>> factor_gaussian(const GaussianInt& z);

/// One representative of every divisor class of a nonzero z under the units
/// {1, -1, i, -i}.
std::vector<GaussianInt> divisors_up_to_units(const GaussianInt& z);

/// 1, i, -1, -i
const std::vector<GaussianInt>& gaussian_units();

}  // namespace polycommute
