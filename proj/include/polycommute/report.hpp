#pragma once

#include <json.hpp>

#include "polycommute/analyzer.hpp"
#include "polycommute/multipoly.hpp"
#include "polycommute/search.hpp"

namespace polycommute {

using Json = nlohmann::ordered_json;

/// {"verdict", "lambda"?, "n"?, "alpha"?, "c"?, "residual"?, "diagnostics"}
/// with scalars and polynomials in canonical text form.
Json to_json(const ClassificationReport& report);

/// {"verdict", "diagnostics", "summary"}; the summary lists bucket counts,
/// each commuting candidate with its classification, and the violations.
/// Wall time is left out so that the bytes depend only on the inputs.
Json to_json(const VerificationSummary& summary);

Json decomposition_json(const MultiPoly& q);

}  // namespace polycommute
