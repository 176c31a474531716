#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polycommute/scalar.hpp"

namespace polycommute {

/// Exponent vector (alpha_1, ..., alpha_nu) of a monomial x^alpha.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t arity) : exponents_(arity, 0) {}
  explicit MultiIndex(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}
  MultiIndex(std::initializer_list<unsigned> exponents) : exponents_(exponents) {}

  /// x_var^power in `arity` variables.
  static MultiIndex unit(std::size_t arity, std::size_t var, unsigned power = 1);

  std::size_t arity() const noexcept { return exponents_.size(); }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  unsigned& operator[](std::size_t i) { return exponents_[i]; }
  std::span<const unsigned> exponents() const noexcept { return exponents_; }

  /// |alpha|
  unsigned total() const;
  bool is_zero() const { return total() == 0; }

  MultiIndex& operator+=(const MultiIndex& rhs);
  friend MultiIndex operator+(MultiIndex lhs, const MultiIndex& rhs) { return lhs += rhs; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> exponents_;
};

/// Graded lexicographic order, highest total degree first; ties broken so
/// that x1 precedes x2.
struct GradedLexDescending {
  bool operator()(const MultiIndex& lhs, const MultiIndex& rhs) const;
};

/// Total degree with -infinity for the zero polynomial. -infinity absorbs
/// addition and is the identity of max.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr Degree(long value) : value_(value) {}  // NOLINT

  static constexpr Degree negative_infinity() { return Degree(); }

  constexpr bool is_negative_infinity() const { return !value_.has_value(); }
  /// Throws std::bad_optional_access on -infinity.
  long value() const { return value_.value(); }

  friend Degree operator+(Degree lhs, Degree rhs) {
    if (lhs.is_negative_infinity() || rhs.is_negative_infinity()) return {};
    return Degree(*lhs.value_ + *rhs.value_);
  }
  friend Degree operator*(Degree lhs, long factor) {
    if (lhs.is_negative_infinity()) return {};
    return Degree(*lhs.value_ * factor);
  }
  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& lhs, const Degree& rhs) {
    if (lhs.is_negative_infinity() || rhs.is_negative_infinity()) {
      return rhs.is_negative_infinity() <=> lhs.is_negative_infinity();
    }
    return *lhs.value_ <=> *rhs.value_;
  }

 private:
  std::optional<long> value_;
};

inline Degree max(Degree lhs, Degree rhs) { return lhs < rhs ? rhs : lhs; }

struct Monomial {
  Scalar coefficient;
  MultiIndex exponents;
};

/// Sparse polynomial in a fixed number of variables x1..x_arity.
///
/// Terms are kept in graded-lex descending order and no stored coefficient
/// is zero (for floating coefficients: none has magnitude <= eps). The zero
/// polynomial has no terms. Arity never changes implicitly: every binary
/// operation requires equal arities and throws ArityMismatch otherwise.
class MultiPoly {
 public:
  using TermMap = std::map<MultiIndex, Scalar, GradedLexDescending>;

  explicit MultiPoly(std::size_t arity);

  static MultiPoly constant(std::size_t arity, const Scalar& value);
  static MultiPoly variable(std::size_t arity, std::size_t var);
  static MultiPoly monomial(const Scalar& coefficient, MultiIndex exponents);
  /// Sums coefficients of repeated exponents.
  static MultiPoly from_terms(std::size_t arity,
                              const std::vector<std::pair<MultiIndex, Scalar>>& terms);

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Backend of the stored coefficients; nullopt for the zero polynomial.
  std::optional<Backend> backend() const;

  Scalar coefficient(const MultiIndex& exponents) const;
  Scalar constant_term() const;

  Degree total_degree() const;
  Degree degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;
  /// Number of variables the polynomial actually depends on.
  std::size_t dependent_variable_count() const;
  std::optional<Monomial> as_monomial() const;
  Scalar evaluate(std::span<const Scalar> point) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);

  MultiPoly scaled(const Scalar& factor) const;
  MultiPoly pow(unsigned exponent) const;
  MultiPoly to_floating(const BigFloat& eps = default_epsilon()) const;

  /// Coefficient-wise Scalar equality on identical supports.
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs);

 private:
  void accumulate(const MultiIndex& exponents, const Scalar& value);
  void check_compatible(const MultiPoly& other, const char* op) const;
  Scalar unit_like() const;

  std::size_t arity_;
  TermMap terms_;
};

/// A polynomial in one variable x: a MultiPoly of arity 1.
class UniPoly {
 public:
  UniPoly() : poly_(1) {}
  /// Throws ArityMismatch unless `poly` has arity 1.
  explicit UniPoly(MultiPoly poly);

  /// coefficients[k] multiplies x^k.
  static UniPoly from_coefficients(const std::vector<Scalar>& coefficients);
  static UniPoly power(unsigned n, const Scalar& coefficient = Scalar(1));
  static UniPoly identity() { return power(1); }

  const MultiPoly& poly() const noexcept { return poly_; }
  Degree degree() const { return poly_.total_degree(); }
  bool is_zero() const { return poly_.is_zero(); }
  Scalar coefficient(unsigned k) const;
  /// Zero for the zero polynomial.
  Scalar leading() const;
  /// Dense a_0..a_n; empty for the zero polynomial.
  std::vector<Scalar> coefficients() const;

  Scalar operator()(const Scalar& value) const;
  UniPoly derivative() const;

  friend UniPoly operator+(const UniPoly& lhs, const UniPoly& rhs) { return UniPoly(lhs.poly_ + rhs.poly_); }
  friend UniPoly operator-(const UniPoly& lhs, const UniPoly& rhs) { return UniPoly(lhs.poly_ - rhs.poly_); }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) { return UniPoly(lhs.poly_ * rhs.poly_); }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  MultiPoly poly_;
};

/// P(Q(x1, ..., x_nu)).
MultiPoly compose_outer(const UniPoly& outer, const MultiPoly& inner);

/// Q(P(x1), ..., P(x_nu)).
MultiPoly compose_each(const MultiPoly& outer, const UniPoly& inner);

/// Q_0, ..., Q_m with Q = sum_i Q_i * x_var^i, m = degree of Q in x_var.
/// Each Q_i keeps the arity of Q and does not involve x_var. Empty for Q = 0.
std::vector<MultiPoly> coeff_polys_in(const MultiPoly& poly, std::size_t var);

struct HomogeneousDecomposition {
  /// parts[k] collects the terms of total degree k (possibly zero).
  std::vector<MultiPoly> parts;

  MultiPoly sum(std::size_t arity) const;
};

/// H_0, ..., H_m for m = total degree; no parts for the zero polynomial.
HomogeneousDecomposition homogeneous_parts(const MultiPoly& poly);

/// Q = f(x_var) + g + x_var * q, where f holds the terms in x_var alone,
/// g the terms free of x_var (including the constant) and every term of
/// x_var * q involves x_var and at least one other variable.
struct FgqSplit {
  std::size_t var;
  UniPoly f;
  MultiPoly g;
  MultiPoly q;
  /// Only for arity 2: the cross part divided by x1*x2, so that
  /// Q = f(x) + g(y) + x*y*q_pair.
  std::optional<MultiPoly> q_pair;

  MultiPoly reassemble() const;
};

FgqSplit split_fgq(const MultiPoly& poly, std::size_t var);

/// f(x_var) as a polynomial of the given arity.
MultiPoly embed(const UniPoly& poly, std::size_t arity, std::size_t var);

/// Restricts a polynomial that involves at most x_var to a UniPoly.
/// Throws PreconditionError if another variable occurs.
UniPoly restrict_to(const MultiPoly& poly, std::size_t var);

}  // namespace polycommute
