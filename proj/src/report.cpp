#include "polycommute/report.hpp"

#include "polycommute/expression.hpp"

namespace polycommute {

namespace {

Json alpha_json(const MultiIndex& alpha) {
  Json out = Json::array();
  for (unsigned e : alpha.exponents()) out.push_back(e);
  return out;
}

}  // namespace

Json to_json(const ClassificationReport& report) {
  Json out;
  out["verdict"] = std::string(to_string(report.verdict));
  if (report.normal_form) {
    const auto& nf = *report.normal_form;
    out["lambda"] = Json{{"a", nf.lambda.a().to_string()}, {"b", nf.lambda.b().to_string()}};
    out["n"] = nf.n;
    out["alpha"] = alpha_json(nf.alpha);
    out["c"] = nf.c.to_string();
  }
  if (report.residual) out["residual"] = format_poly(*report.residual);
  Json diagnostics = Json::array();
  for (const auto& d : report.diagnostics) diagnostics.push_back(Json{{"name", d.name}, {"pass", d.pass}});
  out["diagnostics"] = std::move(diagnostics);
  return out;
}

Json to_json(const VerificationSummary& summary) {
  Json out;
  out["verdict"] = summary.violations.empty() ? "NoViolations" : "ViolationsFound";
  out["diagnostics"] = Json::array({Json{{"name", "theorem_audit"}, {"pass", summary.violations.empty()}}});

  Json commuting = Json::array();
  for (const auto& entry : summary.commuting) {
    commuting.push_back(Json{{"index", entry.index},
                             {"q", format_poly(entry.q)},
                             {"bucket", std::string(to_string(entry.bucket))},
                             {"classification", to_json(entry.report)}});
  }
  Json violations = Json::array();
  for (const auto& v : summary.violations) {
    violations.push_back(Json{{"index", v.index}, {"q", format_poly(v.q)}, {"reason", v.reason}});
  }
  out["summary"] = Json{{"total_candidates", summary.total_candidates},
                        {"buckets",
                         Json{{"constant", summary.count(Bucket::constant)},
                              {"single_variable", summary.count(Bucket::single_variable)},
                              {"nondegenerate", summary.count(Bucket::nondegenerate)}}},
                        {"commuting", std::move(commuting)},
                        {"violations", std::move(violations)}};
  return out;
}

Json decomposition_json(const MultiPoly& q) {
  Json out;
  out["polynomial"] = format_poly(q);
  out["arity"] = q.arity();
  const Degree degree = q.total_degree();
  out["total_degree"] = degree.is_negative_infinity() ? Json("-inf") : Json(degree.value());

  Json parts = Json::array();
  for (const auto& part : homogeneous_parts(q).parts) parts.push_back(format_poly(part));
  out["homogeneous_parts"] = std::move(parts);

  Json by_var;
  for (std::size_t v = 0; v < q.arity(); ++v) {
    const std::string name = "x" + std::to_string(v + 1);
    Json coefficients = Json::array();
    for (const auto& c : coeff_polys_in(q, v)) coefficients.push_back(format_poly(c));
    const FgqSplit split = split_fgq(q, v);
    Json split_json{{"f", format_poly(embed(split.f, q.arity(), v))}, {"g", format_poly(split.g)}, {"q", format_poly(split.q)}};
    if (split.q_pair) split_json["q_pair"] = format_poly(*split.q_pair);
    by_var[name] = Json{{"degree", q.degree_in(v).is_negative_infinity() ? Json("-inf")
                                                                         : Json(q.degree_in(v).value())},
                        {"coefficients", std::move(coefficients)},
                        {"split", std::move(split_json)}};
  }
  out["variables"] = std::move(by_var);
  if (const auto monomial = q.as_monomial()) {
    out["monomial"] = Json{{"c", monomial->coefficient.to_string()}, {"alpha", alpha_json(monomial->exponents)}};
  }
  out["nondegenerate"] = check_nondegeneracy(q);
  return out;
}

}  // namespace polycommute
