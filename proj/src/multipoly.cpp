#include "polycommute/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace polycommute {

namespace {

[[noreturn]] void throw_arity(std::size_t lhs, std::size_t rhs, const char* op) {
  throw ArityMismatch(std::string(op) + ": arity " + std::to_string(lhs) + " vs " +
                      std::to_string(rhs));
}

void check_var(std::size_t var, std::size_t arity) {
  if (var >= arity) {
    throw PreconditionError("variable index " + std::to_string(var) + " out of range for arity " +
                            std::to_string(arity));
  }
}

}  // namespace

MultiIndex MultiIndex::unit(std::size_t arity, std::size_t var, unsigned power) {
  MultiIndex index(arity);
  index.exponents_.at(var) = power;
  return index;
}

unsigned MultiIndex::total() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0U);
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& rhs) {
  if (arity() != rhs.arity()) throw_arity(arity(), rhs.arity(), "multi-index sum");
  for (std::size_t i = 0; i < exponents_.size(); ++i) exponents_[i] += rhs.exponents_[i];
  return *this;
}

bool GradedLexDescending::operator()(const MultiIndex& lhs, const MultiIndex& rhs) const {
  const unsigned lt = lhs.total();
  const unsigned rt = rhs.total();
  if (lt != rt) return lt > rt;
  return rhs < lhs;
}

// MultiPoly

MultiPoly::MultiPoly(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw PreconditionError("polynomial arity must be at least 1");
}

MultiPoly MultiPoly::constant(std::size_t arity, const Scalar& value) {
  MultiPoly result(arity);
  result.accumulate(MultiIndex(arity), value);
  return result;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t var) {
  check_var(var, arity);
  return monomial(Scalar(1), MultiIndex::unit(arity, var));
}

MultiPoly MultiPoly::monomial(const Scalar& coefficient, MultiIndex exponents) {
  MultiPoly result(exponents.arity());
  result.accumulate(exponents, coefficient);
  return result;
}

MultiPoly MultiPoly::from_terms(std::size_t arity,
                                const std::vector<std::pair<MultiIndex, Scalar>>& terms) {
  MultiPoly result(arity);
  for (const auto& [exponents, value] : terms) {
    if (exponents.arity() != arity) throw_arity(arity, exponents.arity(), "from_terms");
    result.accumulate(exponents, value);
  }
  return result;
}

void MultiPoly::accumulate(const MultiIndex& exponents, const Scalar& value) {
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    if (!value.is_zero()) terms_.emplace(exponents, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::check_compatible(const MultiPoly& other, const char* op) const {
  if (arity_ != other.arity_) throw_arity(arity_, other.arity_, op);
  const auto mine = backend();
  const auto theirs = other.backend();
  if (mine && theirs && *mine != *theirs) {
    throw BackendMismatch(std::string(op) + ": exact and floating polynomials");
  }
}

Scalar MultiPoly::unit_like() const {
  return terms_.empty() ? Scalar(1) : terms_.begin()->second.one_like();
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

std::optional<Backend> MultiPoly::backend() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->second.backend();
}

Scalar MultiPoly::coefficient(const MultiIndex& exponents) const {
  auto it = terms_.find(exponents);
  if (it != terms_.end()) return it->second;
  return unit_like().zero_like();
}

Scalar MultiPoly::constant_term() const { return coefficient(MultiIndex(arity_)); }

Degree MultiPoly::total_degree() const {
  if (terms_.empty()) return Degree::negative_infinity();
  return Degree(terms_.begin()->first.total());
}

Degree MultiPoly::degree_in(std::size_t var) const {
  check_var(var, arity_);
  Degree result = Degree::negative_infinity();
  for (const auto& [exponents, value] : terms_) result = max(result, Degree(exponents[var]));
  return result;
}

bool MultiPoly::depends_on(std::size_t var) const {
  check_var(var, arity_);
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const auto& term) { return term.first[var] > 0; });
}

std::size_t MultiPoly::dependent_variable_count() const {
  std::size_t count = 0;
  for (std::size_t v = 0; v < arity_; ++v) count += depends_on(v) ? 1 : 0;
  return count;
}

std::optional<Monomial> MultiPoly::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return Monomial{terms_.begin()->second, terms_.begin()->first};
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != arity_) throw_arity(arity_, point.size(), "evaluate");
  Scalar result = point.empty() ? Scalar() : point.front().zero_like();
  if (!terms_.empty()) result = terms_.begin()->second.zero_like();
  for (const auto& [exponents, value] : terms_) {
    Scalar term = value;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (exponents[i] != 0) term *= point[i].pow(exponents[i]);
    }
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly result(arity_);
  for (const auto& [exponents, value] : terms_) result.terms_.emplace_hint(result.terms_.end(), exponents, -value);
  return result;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_compatible(rhs, "add");
  for (const auto& [exponents, value] : rhs.terms_) accumulate(exponents, value);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_compatible(rhs, "sub");
  for (const auto& [exponents, value] : rhs.terms_) accumulate(exponents, -value);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  lhs.check_compatible(rhs, "mul");
  MultiPoly result(lhs.arity_);
  for (const auto& [le, lv] : lhs.terms_) {
    for (const auto& [re, rv] : rhs.terms_) result.accumulate(le + re, lv * rv);
  }
  return result;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly MultiPoly::scaled(const Scalar& factor) const {
  MultiPoly result(arity_);
  for (const auto& [exponents, value] : terms_) result.accumulate(exponents, value * factor);
  return result;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(arity_, unit_like());
  MultiPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::to_floating(const BigFloat& eps) const {
  MultiPoly result(arity_);
  for (const auto& [exponents, value] : terms_) result.accumulate(exponents, value.to_floating(eps));
  return result;
}

bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.arity_ != rhs.arity_) return false;
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  auto it = rhs.terms_.begin();
  for (const auto& [exponents, value] : lhs.terms_) {
    if (!(exponents == it->first) || !(value == it->second)) return false;
    ++it;
  }
  return true;
}

// UniPoly

UniPoly::UniPoly(MultiPoly poly) : poly_(std::move(poly)) {
  if (poly_.arity() != 1) throw_arity(1, poly_.arity(), "UniPoly");
}

UniPoly UniPoly::from_coefficients(const std::vector<Scalar>& coefficients) {
  MultiPoly poly(1);
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    poly += MultiPoly::monomial(coefficients[k], MultiIndex{static_cast<unsigned>(k)});
  }
  return UniPoly(std::move(poly));
}

UniPoly UniPoly::power(unsigned n, const Scalar& coefficient) {
  return UniPoly(MultiPoly::monomial(coefficient, MultiIndex{n}));
}

Scalar UniPoly::coefficient(unsigned k) const { return poly_.coefficient(MultiIndex{k}); }

Scalar UniPoly::leading() const {
  if (poly_.is_zero()) return Scalar();
  return poly_.terms().begin()->second;
}

std::vector<Scalar> UniPoly::coefficients() const {
  if (poly_.is_zero()) return {};
  const auto n = static_cast<std::size_t>(degree().value());
  std::vector<Scalar> dense(n + 1, leading().zero_like());
  for (const auto& [exponents, value] : poly_.terms()) dense[exponents[0]] = value;
  return dense;
}

Scalar UniPoly::operator()(const Scalar& value) const {
  const auto dense = coefficients();
  if (dense.empty()) return value.zero_like();
  Scalar result = dense.back();
  for (std::size_t k = dense.size() - 1; k-- > 0;) result = result * value + dense[k];
  return result;
}

UniPoly UniPoly::derivative() const {
  MultiPoly result(1);
  for (const auto& [exponents, value] : poly_.terms()) {
    if (exponents[0] == 0) continue;
    result += MultiPoly::monomial(value * Scalar(static_cast<long>(exponents[0])),
                                  MultiIndex{exponents[0] - 1});
  }
  return UniPoly(std::move(result));
}

// Composition and decompositions

MultiPoly embed(const UniPoly& poly, std::size_t arity, std::size_t var) {
  check_var(var, arity);
  MultiPoly result(arity);
  for (const auto& [exponents, value] : poly.poly().terms()) {
    result += MultiPoly::monomial(value, MultiIndex::unit(arity, var, exponents[0]));
  }
  return result;
}

UniPoly restrict_to(const MultiPoly& poly, std::size_t var) {
  check_var(var, poly.arity());
  MultiPoly result(1);
  for (const auto& [exponents, value] : poly.terms()) {
    for (std::size_t i = 0; i < poly.arity(); ++i) {
      if (i != var && exponents[i] != 0) {
        throw PreconditionError("polynomial involves a variable other than x" + std::to_string(var + 1));
      }
    }
    result += MultiPoly::monomial(value, MultiIndex{exponents[var]});
  }
  return UniPoly(std::move(result));
}

MultiPoly compose_outer(const UniPoly& outer, const MultiPoly& inner) {
  const auto dense = outer.coefficients();
  if (dense.empty()) return MultiPoly(inner.arity());
  MultiPoly result = MultiPoly::constant(inner.arity(), dense.back());
  for (std::size_t k = dense.size() - 1; k-- > 0;) {
    result = result * inner;
    result += MultiPoly::constant(inner.arity(), dense[k]);
  }
  return result;
}

MultiPoly compose_each(const MultiPoly& outer, const UniPoly& inner) {
  const std::size_t arity = outer.arity();
  // powers[v][e] = inner(x_v)^e, filled on demand
  std::vector<std::vector<MultiPoly>> powers(arity);
  auto power_of = [&](std::size_t var, unsigned e) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(MultiPoly::constant(arity, Scalar(1)));
    while (cache.size() <= e) {
      if (cache.size() == 1) {
        cache.push_back(embed(inner, arity, var));
      } else {
        cache.push_back(cache.back() * cache[1]);
      }
    }
    return cache[e];
  };

  MultiPoly result(arity);
  for (const auto& [exponents, value] : outer.terms()) {
    std::optional<MultiPoly> term;
    for (std::size_t v = 0; v < arity; ++v) {
      if (exponents[v] == 0) continue;
      const MultiPoly& factor = power_of(v, exponents[v]);
      term = term ? *term * factor : factor;
    }
    if (term) {
      result += term->scaled(value);
    } else {
      result += MultiPoly::constant(arity, value);
    }
  }
  return result;
}

std::vector<MultiPoly> coeff_polys_in(const MultiPoly& poly, std::size_t var) {
  const Degree degree = poly.degree_in(var);
  if (degree.is_negative_infinity()) return {};
  std::vector<MultiPoly> parts(static_cast<std::size_t>(degree.value()) + 1, MultiPoly(poly.arity()));
  for (const auto& [exponents, value] : poly.terms()) {
    MultiIndex rest = exponents;
    rest[var] = 0;
    parts[exponents[var]] += MultiPoly::monomial(value, std::move(rest));
  }
  return parts;
}

MultiPoly HomogeneousDecomposition::sum(std::size_t arity) const {
  MultiPoly total(arity);
  for (const auto& part : parts) total += part;
  return total;
}

HomogeneousDecomposition homogeneous_parts(const MultiPoly& poly) {
  HomogeneousDecomposition result;
  const Degree degree = poly.total_degree();
  if (degree.is_negative_infinity()) return result;
  result.parts.assign(static_cast<std::size_t>(degree.value()) + 1, MultiPoly(poly.arity()));
  for (const auto& [exponents, value] : poly.terms()) {
    result.parts[exponents.total()] += MultiPoly::monomial(value, exponents);
  }
  return result;
}

MultiPoly FgqSplit::reassemble() const {
  const std::size_t arity = g.arity();
  return embed(f, arity, var) + g + MultiPoly::variable(arity, var) * q;
}

FgqSplit split_fgq(const MultiPoly& poly, std::size_t var) {
  const std::size_t arity = poly.arity();
  check_var(var, arity);
  FgqSplit split{var, UniPoly(), MultiPoly(arity), MultiPoly(arity), std::nullopt};
  MultiPoly f(1);
  for (const auto& [exponents, value] : poly.terms()) {
    const unsigned own = exponents[var];
    const bool others = exponents.total() != own;
    if (own == 0) {
      split.g += MultiPoly::monomial(value, exponents);
    } else if (!others) {
      f += MultiPoly::monomial(value, MultiIndex{own});
    } else {
      MultiIndex reduced = exponents;
      reduced[var] -= 1;
      split.q += MultiPoly::monomial(value, std::move(reduced));
    }
  }
  split.f = UniPoly(std::move(f));
  if (arity == 2) {
    const std::size_t other = 1 - var;
    MultiPoly pair(arity);
    for (const auto& [exponents, value] : split.q.terms()) {
      MultiIndex reduced = exponents;
      reduced[other] -= 1;
      pair += MultiPoly::monomial(value, std::move(reduced));
    }
    split.q_pair = std::move(pair);
  }
  return split;
}

}  // namespace polycommute
