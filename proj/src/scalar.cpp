#include "polycommute/scalar.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace polycommute {

namespace {

std::string rational_string(const mpq_class& value) { return value.get_str(); }

[[noreturn]] void throw_mismatch(const char* op) {
  throw BackendMismatch(std::string("cannot mix exact and floating scalars in ") + op);
}

std::string float_string(const BigFloat& value) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(30) << value;
  return out.str();
}

}  // namespace

const BigFloat& default_epsilon() {
  static const BigFloat eps("1e-30");
  return eps;
}

BigFloat to_big_float(const mpq_class& value) {
  return BigFloat(value.get_num().get_str()) / BigFloat(value.get_den().get_str());
}

Scalar::Scalar(mpq_class re, mpq_class im) {
  re.canonicalize();
  im.canonicalize();
  value_ = Exact{std::move(re), std::move(im)};
}

Scalar Scalar::floating(BigFloat re, BigFloat im, BigFloat eps) {
  if (eps < 0) throw std::invalid_argument("tolerance must be non-negative");
  return Scalar(Float{std::move(re), std::move(im), std::move(eps)});
}

bool Scalar::is_zero() const {
  if (const auto* e = std::get_if<Exact>(&value_)) return sgn(e->re) == 0 && sgn(e->im) == 0;
  return magnitude() <= std::get<Float>(value_).eps;
}

bool Scalar::is_real() const {
  if (const auto* e = std::get_if<Exact>(&value_)) return sgn(e->im) == 0;
  const auto& f = std::get<Float>(value_);
  return abs(f.im) <= f.eps;
}

const mpq_class& Scalar::real() const {
  if (const auto* e = std::get_if<Exact>(&value_)) return e->re;
  throw_mismatch("real()");
}

const mpq_class& Scalar::imag() const {
  if (const auto* e = std::get_if<Exact>(&value_)) return e->im;
  throw_mismatch("imag()");
}

BigFloat Scalar::float_real() const {
  if (const auto* e = std::get_if<Exact>(&value_)) return to_big_float(e->re);
  return std::get<Float>(value_).re;
}

BigFloat Scalar::float_imag() const {
  if (const auto* e = std::get_if<Exact>(&value_)) return to_big_float(e->im);
  return std::get<Float>(value_).im;
}

BigFloat Scalar::epsilon() const {
  if (is_exact()) return BigFloat(0);
  return std::get<Float>(value_).eps;
}

Scalar Scalar::norm() const {
  if (const auto* e = std::get_if<Exact>(&value_)) {
    return Scalar(mpq_class(e->re * e->re + e->im * e->im));
  }
  const auto& f = std::get<Float>(value_);
  return floating(f.re * f.re + f.im * f.im, BigFloat(0), f.eps);
}

BigFloat Scalar::magnitude() const {
  const BigFloat re = float_real();
  const BigFloat im = float_imag();
  return sqrt(re * re + im * im);
}

Scalar Scalar::zero_like() const {
  if (is_exact()) return Scalar();
  return floating(0, 0, std::get<Float>(value_).eps);
}

Scalar Scalar::one_like() const {
  if (is_exact()) return Scalar(1);
  return floating(1, 0, std::get<Float>(value_).eps);
}

Scalar Scalar::to_floating(const BigFloat& eps) const {
  if (!is_exact()) return *this;
  return floating(float_real(), float_imag(), eps);
}

Scalar Scalar::conj() const {
  if (const auto* e = std::get_if<Exact>(&value_)) return Scalar(e->re, -e->im);
  const auto& f = std::get<Float>(value_);
  return floating(f.re, -f.im, f.eps);
}

Scalar Scalar::inverse() const {
  if (is_exact() && is_zero()) throw std::domain_error("division by zero scalar");
  if (const auto* e = std::get_if<Exact>(&value_)) {
    mpq_class n = e->re * e->re + e->im * e->im;
    return Scalar(mpq_class(e->re / n), mpq_class(-e->im / n));
  }
  const auto& f = std::get<Float>(value_);
  BigFloat n = f.re * f.re + f.im * f.im;
  if (n == 0) throw std::domain_error("division by zero scalar");
  return floating(f.re / n, -f.im / n, f.eps);
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = one_like();
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Scalar Scalar::operator-() const {
  if (const auto* e = std::get_if<Exact>(&value_)) return Scalar(mpq_class(-e->re), mpq_class(-e->im));
  const auto& f = std::get<Float>(value_);
  return floating(-f.re, -f.im, f.eps);
}

const Scalar::Float& Scalar::as_float_checked(const Scalar& other, const char* op) const {
  if (other.is_exact()) throw_mismatch(op);
  return std::get<Float>(other.value_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (auto* e = std::get_if<Exact>(&value_)) {
    if (!rhs.is_exact()) throw_mismatch("addition");
    const auto& r = std::get<Exact>(rhs.value_);
    e->re += r.re;
    e->im += r.im;
    return *this;
  }
  auto& f = std::get<Float>(value_);
  const auto& r = as_float_checked(rhs, "addition");
  f.re += r.re;
  f.im += r.im;
  f.eps = std::max(f.eps, r.eps);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (auto* e = std::get_if<Exact>(&value_)) {
    if (!rhs.is_exact()) throw_mismatch("multiplication");
    const auto& r = std::get<Exact>(rhs.value_);
    if (sgn(e->im) == 0 && sgn(r.im) == 0) {
      e->re *= r.re;
      return *this;
    }
    mpq_class re = e->re * r.re - e->im * r.im;
    mpq_class im = e->re * r.im + e->im * r.re;
    e->re = std::move(re);
    e->im = std::move(im);
    return *this;
  }
  auto& f = std::get<Float>(value_);
  const auto& r = as_float_checked(rhs, "multiplication");
  BigFloat re = f.re * r.re - f.im * r.im;
  BigFloat im = f.re * r.im + f.im * r.re;
  f.re = std::move(re);
  f.im = std::move(im);
  f.eps = std::max(f.eps, r.eps);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (is_exact() != rhs.is_exact()) throw_mismatch("division");
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.is_exact() != rhs.is_exact()) throw_mismatch("comparison");
  if (lhs.is_exact()) {
    const auto& a = std::get<Scalar::Exact>(lhs.value_);
    const auto& b = std::get<Scalar::Exact>(rhs.value_);
    return a.re == b.re && a.im == b.im;
  }
  return (lhs - rhs).is_zero();
}

int compare_canonical(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.is_exact() != rhs.is_exact()) throw_mismatch("comparison");
  if (lhs.is_exact()) {
    if (int c = cmp(lhs.real(), rhs.real()); c != 0) return c < 0 ? -1 : 1;
    int c = cmp(lhs.imag(), rhs.imag());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  const BigFloat eps = std::max(lhs.epsilon(), rhs.epsilon());
  const BigFloat dre = lhs.float_real() - rhs.float_real();
  if (abs(dre) > eps) return dre < 0 ? -1 : 1;
  const BigFloat dim = lhs.float_imag() - rhs.float_imag();
  if (abs(dim) > eps) return dim < 0 ? -1 : 1;
  return 0;
}

std::string Scalar::to_string() const {
  if (const auto* e = std::get_if<Exact>(&value_)) {
    if (sgn(e->im) == 0) return rational_string(e->re);
    std::string imag_part;
    if (e->im == 1) {
      imag_part = "i";
    } else if (e->im == -1) {
      imag_part = "-i";
    } else {
      imag_part = rational_string(e->im) + "*i";
    }
    if (sgn(e->re) == 0) return imag_part;
    const bool negative = imag_part.front() == '-';
    return "(" + rational_string(e->re) + (negative ? "" : "+") + imag_part + ")";
  }
  const auto& f = std::get<Float>(value_);
  if (abs(f.im) <= f.eps) return float_string(f.re);
  return "(" + float_string(f.re) + (f.im < 0 ? "" : "+") + float_string(f.im) + "*i)";
}

}  // namespace polycommute
