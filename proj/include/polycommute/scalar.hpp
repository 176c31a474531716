#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <string>
#include <variant>

#include "polycommute/errors.hpp"

namespace polycommute {

/// 256-bit binary floating point used by the floating backend.
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

enum class Backend { exact, floating };

/// 1e-30, the comparison tolerance used when none is given.
const BigFloat& default_epsilon();

BigFloat to_big_float(const mpq_class& value);

/// A coefficient: either an exact Gaussian rational re + im*i with both parts
/// in lowest terms, or a 256-bit complex value compared up to a tolerance.
///
/// Arithmetic and equality between the two backends throw BackendMismatch.
/// Floating results carry the larger of the two operand tolerances.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(Exact{mpq_class(value), mpq_class(0)}) {}  // NOLINT
  Scalar(mpq_class re, mpq_class im = 0);                              // NOLINT

  static Scalar floating(BigFloat re, BigFloat im, BigFloat eps = default_epsilon());
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  Backend backend() const noexcept {
    return std::holds_alternative<Exact>(value_) ? Backend::exact : Backend::floating;
  }
  bool is_exact() const noexcept { return backend() == Backend::exact; }

  /// Exact: the value is 0. Floating: |value| <= eps.
  bool is_zero() const;
  bool is_one() const { return *this == one_like(); }
  bool is_real() const;

  // Exact payload; throw BackendMismatch on a floating scalar.
  const mpq_class& real() const;
  const mpq_class& imag() const;

  // Floating payload; exact scalars are converted.
  BigFloat float_real() const;
  BigFloat float_imag() const;
  BigFloat epsilon() const;

  /// |z|^2; exact for exact scalars.
  Scalar norm() const;
  BigFloat magnitude() const;

  Scalar zero_like() const;
  Scalar one_like() const;
  Scalar to_floating(const BigFloat& eps = default_epsilon()) const;
  Scalar conj() const;
  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Canonical order: real part first, then imaginary part. Exact parts are
  /// compared exactly, floating parts up to the tolerance. Returns -1, 0, 1.
  friend int compare_canonical(const Scalar& lhs, const Scalar& rhs);

  /// "3", "-3/2", "i", "-2/3*i", "(1/2+3/4*i)". Floating values print in
  /// scientific notation and are not meant to be parsed back.
  std::string to_string() const;

 private:
  struct Exact {
    mpq_class re;
    mpq_class im;
  };
  struct Float {
    BigFloat re;
    BigFloat im;
    BigFloat eps;
  };

  explicit Scalar(Float value) : value_(std::move(value)) {}

  const Float& as_float_checked(const Scalar& other, const char* op) const;

  std::variant<Exact, Float> value_{Exact{}};
};

struct CanonicalLess {
  bool operator()(const Scalar& lhs, const Scalar& rhs) const {
    return compare_canonical(lhs, rhs) < 0;
  }
};

}  // namespace polycommute
