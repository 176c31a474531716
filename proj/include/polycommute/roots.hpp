#pragma once

#include <vector>

#include "polycommute/multipoly.hpp"

namespace polycommute {

struct RootMultiplicity {
  Scalar root;
  unsigned multiplicity;
};

/// Every root of an exact polynomial that lies in Q(i), with multiplicity,
/// sorted in canonical Scalar order.
///
/// Candidates u/v come from the Gaussian-integer divisors u of the trailing
/// and v of the leading coefficient once denominators are cleared; each is
/// confirmed by exact evaluation and deflated out to count multiplicity.
/// Throws PreconditionError on the zero polynomial or a floating input.
std::vector<RootMultiplicity> gaussian_rational_roots(const UniPoly& poly);

/// All complex roots of a polynomial, numerically, with multiplicity.
///
/// Simultaneous Aberth iteration at 256 bits; roots closer than 1e-9
/// (relative) are merged into one cluster whose center is polished by Newton
/// steps on the derivative of order multiplicity-1. Results are floating
/// scalars carrying `eps` and are sorted in canonical order.
std::vector<RootMultiplicity> numeric_roots(const UniPoly& poly,
                                            const BigFloat& eps = default_epsilon());

/// Polynomial long division by the monic linear factor (x - root).
UniPoly deflate(const UniPoly& poly, const Scalar& root);

}  // namespace polycommute
