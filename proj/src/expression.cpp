#include "polycommute/expression.hpp"

#include <cctype>

namespace polycommute {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  MultiPoly parse() {
    MultiPoly result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0; }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned natural() {
    skip_space();
    const std::size_t start = pos_;
    const mpz_class value = integer();
    if (!value.fits_uint_p()) {
      pos_ = start;
      fail("exponent too large");
    }
    return static_cast<unsigned>(value.get_ui());
  }

  MultiPoly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MultiPoly result = term();
    if (negate) result = -result;
    for (;;) {
      if (accept('+')) {
        result += term();
      } else if (accept('-')) {
        result -= term();
      } else {
        return result;
      }
    }
  }

  MultiPoly term() {
    MultiPoly result = factor();
    while (accept('*')) result = result * factor();
    return result;
  }

  MultiPoly factor() {
    MultiPoly result = base();
    if (accept('^')) result = result.pow(natural());
    return result;
  }

  MultiPoly base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'i') {
      ++pos_;
      return MultiPoly::constant(arity_, Scalar::imaginary_unit());
    }
    if (c == 'x') {
      const std::size_t start = pos_;
      ++pos_;
      std::size_t index = 1;
      if (peek_digit()) {
        const mpz_class value = integer();
        if (value == 0 || value > arity_) {
          pos_ = start;
          fail("variable x" + value.get_str() + " outside x1..x" + std::to_string(arity_));
        }
        index = value.get_ui();
      } else if (arity_ != 1) {
        pos_ = start;
        fail("bare 'x' is only allowed for univariate input");
      }
      return MultiPoly::variable(arity_, index - 1);
    }
    if (peek_digit()) {
      const mpz_class numerator = integer();
      mpz_class denominator = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        denominator = integer();
        if (denominator == 0) {
          pos_ = at;
          fail("division by zero");
        }
      }
      mpq_class value(numerator, denominator);
      value.canonicalize();
      if (peek_alpha()) fail("implicit multiplication is not supported");
      return MultiPoly::constant(arity_, Scalar(value));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  bool peek_alpha() const {
    return pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'i' || text_[pos_] == '(');
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

bool displays_negative(const Scalar& c) {
  if (!c.is_exact()) {
    if (c.is_real()) return c.float_real() < 0;
    return false;
  }
  if (sgn(c.imag()) == 0) return sgn(c.real()) < 0;
  if (sgn(c.real()) == 0) return sgn(c.imag()) < 0;
  return false;
}

std::string monomial_text(const MultiIndex& exponents) {
  std::string out;
  for (std::size_t v = 0; v < exponents.arity(); ++v) {
    if (exponents[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(v + 1);
    if (exponents[v] > 1) out += '^' + std::to_string(exponents[v]);
  }
  return out;
}

std::string term_text(const Scalar& c, const MultiIndex& exponents) {
  if (exponents.is_zero()) return c.to_string();
  const std::string vars = monomial_text(exponents);
  if (c.is_one()) return vars;
  if ((-c).is_one()) return "-" + vars;
  return c.to_string() + "*" + vars;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, std::size_t arity) { return Parser(text, arity).parse(); }

UniPoly parse_unipoly(std::string_view text) { return UniPoly(parse_poly(text, 1)); }

Scalar parse_scalar(std::string_view text) {
  const MultiPoly value = parse_poly(text, 1);
  if (!value.is_constant()) throw ParseError("expected a constant", 0);
  return value.is_zero() ? Scalar() : value.constant_term();
}

std::string format_poly(const MultiPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exponents, c] : poly.terms()) {
    if (first) {
      out = term_text(c, exponents);
      first = false;
    } else if (displays_negative(c)) {
      out += " - " + term_text(-c, exponents);
    } else {
      out += " + " + term_text(c, exponents);
    }
  }
  return out;
}

std::string format_poly(const UniPoly& poly) { return format_poly(poly.poly()); }

}  // namespace polycommute
