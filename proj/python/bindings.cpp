#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tgames/cli.hpp"
#include "tgames/errors.hpp"
#include "tgames/generate.hpp"
#include "tgames/io.hpp"
#include "tgames/oracle.hpp"
#include "tgames/validate.hpp"

namespace py = pybind11;
using namespace tgames;

namespace {

std::vector<std::string> names(const TemporalGame& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (Vertex v : s.members()) out.push_back(g.name(v));
  return out;
}

IterationLimits limits_of(std::uint64_t budget, std::uint64_t expansion_budget) {
  IterationLimits l;
  l.budget = budget;
  l.expansion_budget = expansion_budget;
  return l;
}

py::dict solve(const std::string& text, std::uint64_t budget, std::uint64_t expansion_budget, bool naive) {
  const TemporalGame g = parse_game(text);
  if (const auto violations = validate(g); !violations.empty()) throw Error(violations.front().to_string());
  const auto r = cli::solve_game(g, limits_of(budget, expansion_budget), naive);
  py::dict out;
  out["winner"] = to_int(r.winner);
  out["region"] = names(g, r.region);
  out["method"] = r.method;
  out["certificate"] = r.certificate ? py::object(py::str(serialise_certificate(*r.certificate, g))) : py::none();
  out["backward_steps"] = r.stats.backward_steps;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Games on temporal graphs";

  py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

  m.def("canonical", [](const std::string& text) { return serialise_game(parse_game(text)); },
        "Canonical JSON form of a game", py::arg("text"));

  m.def("validate", [](const std::string& text) {
    std::vector<std::string> out;
    for (const auto& v : validate(parse_game(text))) out.push_back(v.to_string());
    return out;
  }, py::arg("text"));

  m.def("solve", &solve, py::arg("text"), py::arg("budget") = kDefaultIterationBudget,
        py::arg("expansion_budget") = kDefaultExpansionBudget, py::arg("naive") = false);

  m.def("oracle_region", [](const std::string& text) {
    const TemporalGame g = parse_game(text);
    return names(g, oracle_solve(g).region);
  }, py::arg("text"));

  m.def("verify_certificate", [](const std::string& game, const std::string& cert) {
    const TemporalGame g = parse_game(game);
    const Certificate c = parse_certificate(cert, g);
    const auto check = verify_certificate(g, c, c.initial);
    return py::make_tuple(check.ok, check.diagnostic);
  }, py::arg("game"), py::arg("certificate"));

  m.def("generate", [](const std::string& profile, std::uint64_t seed, std::size_t vertices) {
    const auto p = parse_profile(profile);
    if (!p) throw Error("unknown profile \"" + profile + "\"");
    GenerateOptions o;
    o.vertices = vertices;
    return serialise_game(generate(*p, seed, o));
  }, py::arg("profile"), py::arg("seed") = 0, py::arg("vertices") = 5);

  m.def("profiles", &profile_names);

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs the command-line front end; returns (exit code, stdout, stderr)", py::arg("args"));
}
