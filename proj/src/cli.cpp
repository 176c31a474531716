#include "polycommute/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <iterator>
#include <sstream>

#include "polycommute/analyzer.hpp"
#include "polycommute/expression.hpp"
#include "polycommute/report.hpp"
#include "polycommute/search.hpp"

namespace polycommute {

namespace {

struct Options {
  std::string p_text;
  std::string q_text;
  std::size_t nu = 2;
  unsigned degree = 2;
  std::string grid = "-1,0,1";
  unsigned jobs = 1;
  bool json = false;
  std::string backend = "exact";
  std::string eps = "1e-30";
  unsigned n = 0;
  std::uint64_t budget = 10'000'000;
};

class Runner {
 public:
  Runner(const Options& options, std::istream& in, std::ostream& out)
      : opt_(options), in_(in), out_(out) {}

  int check() {
    const MultiPoly residual = commutator_residual(p(), q());
    if (opt_.json) {
      Json j{{"verdict", residual.is_zero() ? "Commuting" : "NotCommuting"},
             {"residual", format_poly(residual)}};
      emit(j);
    } else if (residual.is_zero()) {
      out_ << "commuting\n";
    } else {
      out_ << "not commuting\nresidual: " << format_poly(residual) << "\n";
    }
    return residual.is_zero() ? kExitOk : kExitNotCommuting;
  }

  int classify_pair() {
    const ClassificationReport report = classify(p(), q());
    if (opt_.json) {
      emit(to_json(report));
      return kExitOk;
    }
    out_ << "verdict: " << to_string(report.verdict) << "\n";
    if (report.normal_form) {
      const auto& nf = *report.normal_form;
      out_ << "lambda: z -> " << nf.lambda.a().to_string() << "*z + " << nf.lambda.b().to_string() << "\n"
           << "n: " << nf.n << "\n"
           << "alpha: " << alpha_text(nf.alpha) << "\n"
           << "c: " << nf.c.to_string() << "\n";
    }
    if (report.residual) out_ << "residual: " << format_poly(*report.residual) << "\n";
    print_diagnostics(report.diagnostics);
    return kExitOk;
  }

  int normalize() {
    const UniPoly poly = p();
    const auto points = fixed_points(poly);
    const auto result = normalize_unipoly(poly);
    if (opt_.json) {
      Json fixed = Json::array();
      for (const auto& r : points) fixed.push_back(r.to_string());
      Json j{{"verdict", result ? "Normalized" : "ExactBackendInsufficient"}, {"fixed_points", fixed}};
      if (result) {
        j["lambda"] = Json{{"a", result->map.a().to_string()}, {"b", result->map.b().to_string()}};
        j["normalized"] = format_poly(result->normalized);
      }
      emit(j);
      return kExitOk;
    }
    out_ << "fixed points:";
    for (const auto& r : points) out_ << " " << r.to_string();
    out_ << "\n";
    if (!result) {
      out_ << "verdict: ExactBackendInsufficient\n";
      return kExitOk;
    }
    out_ << "lambda: z -> " << result->map.a().to_string() << "*z + " << result->map.b().to_string() << "\n"
         << "normalized: " << format_poly(result->normalized) << "\n";
    return kExitOk;
  }

  int decompose() {
    const Json j = decomposition_json(q());
    if (opt_.json) {
      emit(j);
      return kExitOk;
    }
    out_ << "polynomial: " << j["polynomial"].get<std::string>() << "\n";
    const auto& parts = j["homogeneous_parts"];
    for (std::size_t k = 0; k < parts.size(); ++k) out_ << "H" << k << ": " << parts[k].get<std::string>() << "\n";
    for (const auto& [name, info] : j["variables"].items()) {
      out_ << name << " coefficients:";
      for (const auto& c : info["coefficients"]) out_ << " [" << c.get<std::string>() << "]";
      out_ << "\n" << name << " split: f = " << info["split"]["f"].get<std::string>()
           << ", g = " << info["split"]["g"].get<std::string>()
           << ", q = " << info["split"]["q"].get<std::string>() << "\n";
    }
    out_ << "nondegenerate: " << (j["nondegenerate"].get<bool>() ? "yes" : "no") << "\n";
    return kExitOk;
  }

  int residual() {
    const MultiPoly r = commutator_residual(p(), q());
    if (opt_.json) {
      emit(Json{{"residual", format_poly(r)}, {"zero", r.is_zero()}});
    } else {
      out_ << format_poly(r) << "\n";
    }
    return kExitOk;
  }

  int search() {
    require_exact("search");
    const VerificationSummary summary = exhaustive_search(p(), spec());
    return report_summary(summary);
  }

  int census() {
    require_exact("census");
    unsigned n = opt_.n;
    if (n == 0) {
      if (opt_.p_text.empty()) throw PreconditionError("census needs -n or -P");
      n = static_cast<unsigned>(p().degree().value());
    }
    return report_summary(power_equation_census(n, spec()));
  }

 private:
  bool floating() const { return opt_.backend == "float"; }

  BigFloat eps() const {
    try {
      BigFloat value(opt_.eps);
      if (value < 0) throw std::invalid_argument("negative");
      return value;
    } catch (const std::exception&) {
      throw PreconditionError("invalid --eps value '" + opt_.eps + "'");
    }
  }

  void require_exact(const char* verb) const {
    if (floating()) throw PreconditionError(std::string(verb) + " only runs over exact grids");
  }

  UniPoly p() const {
    if (opt_.p_text.empty()) throw PreconditionError("missing -P");
    UniPoly poly = parse_unipoly(opt_.p_text);
    return floating() ? UniPoly(poly.poly().to_floating(eps())) : poly;
  }

  MultiPoly q() {
    if (opt_.q_text.empty()) throw PreconditionError("missing -Q");
    if (opt_.q_text == "-" && !q_cache_) {
      q_cache_ = std::string(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    }
    const std::string& text = opt_.q_text == "-" ? *q_cache_ : opt_.q_text;
    MultiPoly poly = parse_poly(text, opt_.nu);
    return floating() ? poly.to_floating(eps()) : poly;
  }

  SearchSpec spec() const {
    SearchSpec s;
    s.arity = opt_.nu;
    s.max_total_degree = opt_.degree;
    s.workers = std::max(1U, opt_.jobs);
    s.budget = opt_.budget;
    std::stringstream items(opt_.grid);
    std::string item;
    while (std::getline(items, item, ',')) s.grid.push_back(parse_scalar(item));
    return s;
  }

  int report_summary(const VerificationSummary& summary) {
    if (opt_.json) {
      emit(to_json(summary));
    } else {
      out_ << "candidates: " << summary.total_candidates << "\n"
           << "commuting: " << summary.commuting.size() << " (constant " << summary.count(Bucket::constant)
           << ", single-variable " << summary.count(Bucket::single_variable) << ", nondegenerate "
           << summary.count(Bucket::nondegenerate) << ")\n";
      for (const auto& entry : summary.commuting) {
        out_ << "  " << format_poly(entry.q) << "  [" << to_string(entry.bucket) << ", "
             << to_string(entry.report.verdict) << "]\n";
      }
      out_ << "violations: " << summary.violations.size() << "\n";
      for (const auto& v : summary.violations) out_ << "  " << format_poly(v.q) << ": " << v.reason << "\n";
      out_ << "wall time: " << summary.wall_time.count() << " s\n";
    }
    return summary.violations.empty() ? kExitOk : kExitViolations;
  }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  void print_diagnostics(const std::vector<Diagnostic>& diagnostics) {
    out_ << "diagnostics:\n";
    for (const auto& d : diagnostics) out_ << "  " << d.name << ": " << (d.pass ? "pass" : "fail") << "\n";
  }

  static std::string alpha_text(const MultiIndex& alpha) {
    std::string s = "[";
    for (std::size_t i = 0; i < alpha.arity(); ++i) s += (i ? ", " : "") + std::to_string(alpha[i]);
    return s + "]";
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::optional<std::string> q_cache_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commuting polynomial pairs: residuals, affine normal forms and exhaustive checks",
               "polycommute"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_p = [&](CLI::App* sub) { sub->add_option("-P", opt.p_text, "univariate P, e.g. \"x^2+2*x\""); };
  auto add_q = [&](CLI::App* sub) {
    sub->add_option("-Q", opt.q_text, "polynomial Q in x1..x_nu, or - for stdin");
    sub->add_option("--nu", opt.nu, "number of variables of Q")->check(CLI::PositiveNumber);
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "emit a JSON report");
    sub->add_option("--backend", opt.backend, "coefficient backend")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--eps", opt.eps, "comparison tolerance of the float backend");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--nu", opt.nu, "number of variables of the candidates")->check(CLI::PositiveNumber);
    sub->add_option("--deg", opt.degree, "maximal total degree of the candidates");
    sub->add_option("--grid", opt.grid, "comma separated exact coefficient values");
    sub->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", opt.budget, "largest admissible candidate count");
  };

  auto* check = app.add_subcommand("check", "exit 0 if P and Q commute, 3 otherwise");
  auto* classify_cmd = app.add_subcommand("classify", "classify the pair and report the normal form");
  auto* normalize = app.add_subcommand("normalize", "conjugate P to a monic polynomial vanishing at 0");
  auto* decompose = app.add_subcommand("decompose", "homogeneous and per-variable decompositions of Q");
  auto* residual = app.add_subcommand("residual", "print Q(P(x1),...,P(x_nu)) - P(Q(x1,...,x_nu))");
  auto* search = app.add_subcommand("search", "exhaustive search for Q commuting with P");
  auto* census = app.add_subcommand("census", "exhaustive search for solutions of Q(x^n) = Q^n");

  for (auto* sub : {check, classify_cmd, residual}) {
    add_p(sub);
    add_q(sub);
    add_common(sub);
  }
  add_p(normalize);
  add_common(normalize);
  add_q(decompose);
  add_common(decompose);
  add_p(search);
  add_search(search);
  search->add_flag("--json", opt.json, "emit a JSON report");
  census->add_option("-n", opt.n, "exponent n of the power equation");
  add_p(census);
  add_search(census);
  census->add_flag("--json", opt.json, "emit a JSON report");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Runner runner(opt, in, out);
  try {
    if (check->parsed()) return runner.check();
    if (classify_cmd->parsed()) return runner.classify_pair();
    if (normalize->parsed()) return runner.normalize();
    if (decompose->parsed()) return runner.decompose();
    if (residual->parsed()) return runner.residual();
    if (search->parsed()) return runner.search();
    if (census->parsed()) return runner.census();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitUsage;
}

}  // namespace polycommute
