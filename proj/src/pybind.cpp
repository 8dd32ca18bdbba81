#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hocolim/verify.hpp"
#include "hocolim/workspace.hpp"

namespace py = pybind11;
using namespace hocolim;

namespace {

ws::Workspace parse_checked(const std::string& text) {
  return ws::parse(text);
}

}  // namespace

// Thin JSON-string surface over the C++ core: workspaces and reports cross
// the boundary as canonical-form JSON text.
PYBIND11_MODULE(_hocolim, m) {
  m.doc() = "homotopy colimits over dg-categories (JSON workspace bindings)";

  py::register_exception<ws::WsError>(m, "WorkspaceError", PyExc_ValueError);

  m.def("builtin_workspace",
        [] { return ws::serialize(verify::builtin_workspace()); },
        "stock workspace with the corpus shapes and example diagrams");

  m.def("canonical", [](const std::string& text) {
          return ws::serialize(parse_checked(text));
        },
        py::arg("workspace"), "re-serialize a workspace in canonical form");

  m.def("homology",
        [](const std::string& text, const std::string& name) {
          auto r = verify::cmd_homology(parse_checked(text), name);
          return r.to_json().dump(2);
        },
        py::arg("workspace"), py::arg("name"),
        "per-degree homology report of a named complex");

  m.def("replace",
        [](const std::string& text, const std::string& diagram,
           const std::string& mode, int truncation,
           const std::vector<std::string>& away_from) {
          auto res = verify::cmd_replace(parse_checked(text), diagram, mode,
                                         truncation, away_from);
          return py::make_tuple(res.report.to_json().dump(2),
                                ws::serialize(res.output));
        },
        py::arg("workspace"), py::arg("diagram"), py::arg("mode") = "direct",
        py::arg("truncation") = 4,
        py::arg("away_from") = std::vector<std::string>{},
        "pointwise cofibrant replacement; returns (report, output workspace)");

  m.def("wcolim",
        [](const std::string& text, const std::string& weight,
           const std::string& diagram, const std::string& check_quillen) {
          auto r = verify::cmd_wcolim(parse_checked(text), weight, diagram,
                                      check_quillen);
          return r.to_json().dump(2);
        },
        py::arg("workspace"), py::arg("weight"), py::arg("diagram"),
        py::arg("check_quillen") = "",
        "weighted colimit report, optionally verifying WE preservation");

  m.def("verify",
        [](const std::string& text, const std::string& suite,
           std::uint64_t seed) {
          auto r = verify::cmd_verify(parse_checked(text), suite, seed);
          return r.to_json().dump(2);
        },
        py::arg("workspace"), py::arg("suite") = "counterexample",
        py::arg("seed") = 0, "run an invariant suite and report verdicts");
}
