#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "zxr/derived.hpp"
#include "zxr/graphstate.hpp"
#include "zxr/rules.hpp"
#include "zxr/semantics.hpp"
#include "zxr/verify.hpp"
#include "zxr/zxd.hpp"

namespace py = pybind11;
using namespace zxr;

namespace {

RuleId rule_or_throw(const std::string& name) {
  const auto r = rule_from_name(name);
  if (!r) throw py::value_error("unknown rule '" + name + "'");
  return *r;
}

Kind colour_or_throw(const std::string& c) {
  if (c == "z") return Kind::Z;
  if (c == "x") return Kind::X;
  throw py::value_error("colour must be 'z' or 'x'");
}

}  // namespace

PYBIND11_MODULE(zxr, m) {
  m.doc() = "ZX diagram rewriting, evaluation and graph-state checks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MatchError>(m, "MatchError", PyExc_ValueError);
  py::register_exception<GateError>(m, "GateError", PyExc_RuntimeError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_MemoryError);

  py::class_<Phase>(m, "Phase")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den") = 1)
      .def_static("parse", &Phase::parse)
      .def_property_readonly("num", &Phase::num)
      .def_property_readonly("den", &Phase::den)
      .def("radians", &Phase::radians)
      .def("__add__", &Phase::operator+)
      .def("__neg__", [](const Phase& p) { return -p; })
      .def("__eq__", [](const Phase& a, const Phase& b) { return a == b; })
      .def("__str__", &Phase::str)
      .def("__repr__", [](const Phase& p) { return "Phase('" + p.str() + "')"; });

  py::class_<Diagram>(m, "Diagram")
      .def_static("parse", [](const std::string& text) { return parse_zxd(text); })
      .def_static("load", &read_zxd_file)
      .def("to_zxd", [](const Diagram& d) { return serialize_zxd(d); })
      .def("to_dot", [](const Diagram& d) { return to_dot(d); })
      .def_property_readonly("inputs", &Diagram::inputs)
      .def_property_readonly("outputs", &Diagram::outputs)
      .def("node_ids", &Diagram::node_ids)
      .def("node_count", [](const Diagram& d) { return d.node_count(); })
      .def("edge_count", [](const Diagram& d) { return d.edge_count(); })
      .def("evaluate", [](const Diagram& d, int n) { return CMatrix(evaluate(d, {n})); }, py::arg("n") = 1)
      .def("iso_equal", [](const Diagram& a, const Diagram& b) { return iso_equal(a, b); })
      .def("compose", [](const Diagram& f, const Diagram& g) { return compose(f, g); })
      .def("tensor", [](const Diagram& f, const Diagram& g) { return tensor(f, g); })
      .def("dagger", [](const Diagram& f) { return dagger(f); })
      .def("normalize", [](const Diagram& d) { return normalize(d); })
      .def("match_sites", [](const Diagram& d, const std::string& rule) { return match_sites(rule_or_throw(rule), d); })
      .def(
          "apply",
          [](const Diagram& d, const std::string& rule, const Anchor& at, bool enable_euler,
             std::optional<std::string> phase, std::optional<std::string> colour) {
            RuleParams p;
            if (phase) p.phase = Phase::parse(*phase);
            if (colour) p.colour = colour_or_throw(*colour);
            return apply(rule_or_throw(rule), d, at, RewriteConfig{enable_euler}, p);
          },
          py::arg("rule"), py::arg("anchor"), py::arg("enable_euler") = false, py::arg("phase") = py::none(),
          py::arg("colour") = py::none())
      .def("__repr__", [](const Diagram& d) {
        return "<Diagram " + std::to_string(d.inputs().size()) + " -> " + std::to_string(d.outputs().size()) + ", " +
               std::to_string(d.node_count()) + " nodes>";
      });

  m.def("rule_names", [] {
    std::vector<std::string> out;
    for (RuleId r : all_rules()) out.push_back(rule_name(r));
    return out;
  });
  m.def("equal_up_to_scalar", &equal_up_to_scalar, py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);

  py::class_<SimpleGraph>(m, "Graph")
      .def_static("parse", [](const std::string& text) { return parse_edges(text); })
      .def("to_edges", [](const SimpleGraph& g) { return serialize_edges(g); })
      .def_property_readonly("vertices", &SimpleGraph::vertices)
      .def("edge_list",
           [](const SimpleGraph& g) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [i, j] : g.edges()) out.emplace_back(g.vertices()[i], g.vertices()[j]);
             return out;
           })
      .def("local_complement", [](const SimpleGraph& g, const std::string& u) { return local_complement(g, u); })
      .def("graph_state", [](const SimpleGraph& g) { return graph_state(g); })
      .def("check_fixpoint", &check_fixpoint, py::arg("u"), py::arg("tol") = 1e-9)
      .def("check_vdn", &check_vdn, py::arg("u"), py::arg("tol") = 1e-9)
      .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; });

  m.def(
      "replay_script",
      [](const std::string& path, bool enable_euler, bool check) {
        ReplayOptions opt;
        opt.cfg.euler_axiom = enable_euler;
        opt.check = check;
        return replay(read_script_file(path), opt);
      },
      py::arg("path"), py::arg("enable_euler") = false, py::arg("check") = true);

  m.def("independence_report", [](std::vector<int> models) {
    const auto rows = independence_report(models);
    return nlohmann::json{{"suite", "independence"},
                          {"passed", independence_as_expected(rows)},
                          {"rows", to_json(rows)}}
        .dump();
  }, py::arg("models") = std::vector<int>{1, 2, 3}, "Independence report as a JSON string.");
}
