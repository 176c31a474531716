#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polycommute/analyzer.hpp"
#include "polycommute/cli.hpp"
#include "polycommute/errors.hpp"
#include "polycommute/expression.hpp"
#include "polycommute/report.hpp"
#include "polycommute/search.hpp"

namespace py = pybind11;

using namespace polycommute;

namespace {

SearchSpec make_spec(std::size_t nu, unsigned max_total_degree, const std::vector<std::string>& grid,
                     unsigned workers, std::uint64_t budget) {
  SearchSpec spec;
  spec.arity = nu;
  spec.max_total_degree = max_total_degree;
  for (const auto& value : grid) spec.grid.push_back(parse_scalar(value));
  spec.workers = workers;
  spec.budget = budget;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Commuting polynomial pairs over the Gaussian rationals";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ArityMismatch>(m, "ArityMismatch", PyExc_ValueError);
  py::register_exception<BackendMismatch>(m, "BackendMismatch", PyExc_ValueError);

  m.def(
      "canonical", [](const std::string& q, std::size_t nu) { return format_poly(parse_poly(q, nu)); },
      "Canonical text of a polynomial in x1..x_nu", py::arg("q"), py::arg("nu") = 2);

  m.def(
      "residual",
      [](const std::string& p, const std::string& q, std::size_t nu) {
        return format_poly(commutator_residual(parse_unipoly(p), parse_poly(q, nu)));
      },
      "Q(P(x1), ..., P(x_nu)) - P(Q(x1, ..., x_nu)) in canonical text", py::arg("p"), py::arg("q"),
      py::arg("nu") = 2);

  m.def(
      "commutes",
      [](const std::string& p, const std::string& q, std::size_t nu) {
        return commutes(parse_unipoly(p), parse_poly(q, nu));
      },
      py::arg("p"), py::arg("q"), py::arg("nu") = 2);

  m.def(
      "classify_json",
      [](const std::string& p, const std::string& q, std::size_t nu) {
        py::gil_scoped_release release;
        return to_json(classify(parse_unipoly(p), parse_poly(q, nu))).dump();
      },
      py::arg("p"), py::arg("q"), py::arg("nu") = 2);

  m.def(
      "decompose_json", [](const std::string& q, std::size_t nu) { return decomposition_json(parse_poly(q, nu)).dump(); },
      py::arg("q"), py::arg("nu") = 2);

  m.def(
      "search_json",
      [](const std::string& p, std::size_t nu, unsigned max_total_degree, const std::vector<std::string>& grid,
         unsigned workers, std::uint64_t budget) {
        const UniPoly poly = parse_unipoly(p);
        const SearchSpec spec = make_spec(nu, max_total_degree, grid, workers, budget);
        py::gil_scoped_release release;
        return to_json(exhaustive_search(poly, spec)).dump();
      },
      py::arg("p"), py::arg("nu") = 2, py::arg("max_total_degree") = 2,
      py::arg("grid") = std::vector<std::string>{"-1", "0", "1"}, py::arg("workers") = 1,
      py::arg("budget") = 10'000'000);

  m.def(
      "census_json",
      [](unsigned n, std::size_t nu, unsigned max_total_degree, const std::vector<std::string>& grid,
         unsigned workers, std::uint64_t budget) {
        const SearchSpec spec = make_spec(nu, max_total_degree, grid, workers, budget);
        py::gil_scoped_release release;
        return to_json(power_equation_census(n, spec)).dump();
      },
      py::arg("n"), py::arg("nu") = 2, py::arg("max_total_degree") = 2,
      py::arg("grid") = std::vector<std::string>{"-1", "0", "1"}, py::arg("workers") = 1,
      py::arg("budget") = 10'000'000);

  m.def(
      "run_cli",
      [](std::vector<std::string> args, const std::string& stdin_text) {
        args.insert(args.begin(), "polycommute");
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        const int code = polycommute::run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs the command-line front end; returns (exit code, stdout, stderr)", py::arg("args"),
      py::arg("stdin") = "");
}
