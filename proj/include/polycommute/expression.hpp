#pragma once

#include <string>
#include <string_view>

#include "polycommute/multipoly.hpp"

namespace polycommute {

/// Parses a polynomial in x1..x_arity with exact Gaussian-rational
/// coefficients.
///
///   expr   := ("+"|"-")? term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := base ("^" nat)?
///   base   := rational | "i" | variable | "(" expr ")"
///   rational := int ("/" int)?
///   variable := "x" nat        (bare "x" means x1 when arity is 1)
///
/// Whitespace is ignored between tokens. Implicit multiplication is an
/// error. Throws ParseError carrying the offending byte offset.
MultiPoly parse_poly(std::string_view text, std::size_t arity);

/// Parses a univariate polynomial; "x" and "x1" both name the variable.
UniPoly parse_unipoly(std::string_view text);

/// Parses a single exact scalar such as "3/2", "-i" or "(1/2+3/4*i)".
Scalar parse_scalar(std::string_view text);

/// Canonical text: graded-lex descending terms joined by " + " / " - ",
/// unit coefficients omitted, "0" for the zero polynomial.
/// parse_poly(format_poly(q), q.arity()) == q for exact q.
std::string format_poly(const MultiPoly& poly);
std::string format_poly(const UniPoly& poly);

}  // namespace polycommute
