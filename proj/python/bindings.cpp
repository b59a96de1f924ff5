#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skein/blocks.hpp"
#include "skein/error.hpp"
#include "skein/form.hpp"
#include "skein/graph.hpp"
#include "skein/level.hpp"
#include "skein/twist.hpp"
#include "skein/verify.hpp"

namespace py = pybind11;
using namespace skein;

namespace {

py::int_ to_py(const mpz_class& x) { return py::int_(py::str(x.get_str())); }

py::dict delta_dict(const DeltaReport& r) {
  py::dict d;
  d["value"] = r.value;
  d["j_min"] = r.j_min;
  d["j_max"] = r.j_max;
  d["variant"] = r.variant == DeltaVariant::plain ? "plain" : "one-handle";
  d["typography_resolved"] = r.typography_resolved;
  d["as_printed"] = r.as_printed ? py::object(py::int_(*r.as_printed)) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact conformal-block dimensions, twist orders and form signatures";

  static py::exception<Error> skein_error(m, "SkeinError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(skein_error, e.what());
    }
  });

  py::class_<Level>(m, "Level")
      .def(py::init<int>(), py::arg("p"))
      .def_property_readonly("p", &Level::p)
      .def_property_readonly("parity", [](const Level& l) { return to_string(l.parity()); })
      .def_property_readonly("colors", [](const Level& l) { return std::vector<int>(l.colors().begin(), l.colors().end()); })
      .def_property_readonly("q_bound", &Level::q_bound)
      .def("__repr__", [](const Level& l) { return "Level(" + std::to_string(l.p()) + ")"; });

  m.def("admissible_triple", &admissible_triple, py::arg("level"), py::arg("a"), py::arg("b"), py::arg("c"));

  py::class_<TrivalentGraph>(m, "Graph")
      .def(py::init<int, std::vector<std::pair<int, int>>, std::vector<int>>(), py::arg("vertices"),
           py::arg("edges"), py::arg("legs"))
      .def_property_readonly("genus", &TrivalentGraph::genus)
      .def_property_readonly("vertex_count", &TrivalentGraph::vertex_count)
      .def_property_readonly("edges", &TrivalentGraph::edges)
      .def_property_readonly("legs", &TrivalentGraph::legs)
      .def("to_json", [](const TrivalentGraph& g) { return to_json(g); })
      .def("__eq__", [](const TrivalentGraph& a, const TrivalentGraph& b) { return a == b; });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("chain", &chain, py::arg("g"), py::arg("n"));
  m.def("caterpillar", [](const std::string& pattern) { return caterpillar(pattern); });
  m.def("theta", &theta);
  m.def("dumbbell", &dumbbell);
  m.def("tetrahedron", &tetrahedron);
  m.def("necklace2", &necklace2);

  m.def("classify_edge", [](const TrivalentGraph& g, int e) { return to_string(classify_edge(g, e)); });
  m.def("curve_types", [](const TrivalentGraph& g) {
    std::vector<std::pair<std::string, std::vector<int>>> out;
    for (const auto& c : curve_types(g)) out.emplace_back(to_string(c.type), c.edges);
    return out;
  });

  m.def("enumerate_colorings",
        [](const Level& l, const TrivalentGraph& g, const BoundaryColoring& b) { return enumerate_colorings(l, g, b); },
        py::arg("level"), py::arg("graph"), py::arg("legs") = BoundaryColoring{});
  m.def("dim_blocks",
        [](const Level& l, const TrivalentGraph& g, const BoundaryColoring& b) { return to_py(dim_blocks(l, g, b)); },
        py::arg("level"), py::arg("graph"), py::arg("legs") = BoundaryColoring{});
  m.def("genus0_nonzero", [](const Level& l, const std::vector<int>& c) { return genus0_nonzero(l, c); });
  m.def("delta", [](const Level& l, const std::vector<int>& c) { return delta_dict(delta(l, c)); });
  m.def("delta_one_handle", [](const Level& l, const std::vector<int>& c) { return delta_dict(delta_one_handle(l, c)); });
  m.def("delta_oracle", [](const Level& l, const std::vector<int>& c) { return delta_oracle(l, c); });
  m.def("delta_one_handle_oracle", [](const Level& l, const std::vector<int>& c) { return delta_one_handle_oracle(l, c); });
  m.def("dim_genus1_pair", &dim_genus1_pair);

  m.def("twist_exponent", &twist_exponent);
  m.def("effective_colors", &effective_colors, py::arg("level"), py::arg("graph"), py::arg("edge"),
        py::arg("legs") = BoundaryColoring{});
  m.def("twist_projective_order", &twist_projective_order, py::arg("level"), py::arg("graph"), py::arg("edge"),
        py::arg("legs") = BoundaryColoring{});
  m.def(
      "order_report",
      [](const Level& l, const TrivalentGraph& g, int e, const BoundaryColoring& b) {
        const OrderReport r = order_report(l, g, e, b);
        py::dict d;
        d["computed"] = r.computed;
        d["predicted"] = r.predicted ? py::object(py::int_(*r.predicted)) : py::object(py::none());
        d["row"] = r.row;
        d["match"] = r.match;
        d["typography_resolved"] = r.typography_resolved;
        d["type"] = to_string(r.type);
        return d;
      },
      py::arg("level"), py::arg("graph"), py::arg("edge"), py::arg("legs") = BoundaryColoring{});
  m.def("standard_level_vector", &standard_level_vector);
  m.def(
      "check_factorization",
      [](const Level& l, const TrivalentGraph& g, const BoundaryColoring& b, const LevelVector& k) {
        const auto r = check_factorization(l, g, b, k);
        py::dict d;
        d["pass"] = r.pass();
        d["orders"] = r.orders;
        std::vector<int> bad;
        for (const auto& v : r.violations) bad.push_back(v.edge);
        d["violating_edges"] = bad;
        return d;
      },
      py::arg("level"), py::arg("graph"), py::arg("legs"), py::arg("k"));

  m.def(
      "signature",
      [](const Level& l, const TrivalentGraph& g, const BoundaryColoring& b, std::optional<int> ell) {
        const RootSelector root = ell ? RootSelector(l.p(), *ell) : RootSelector::unitary(l.p());
        const SignaturePair s = signature_up_to_sign(l, root, g, b);
        return std::pair{s.major, s.minor};
      },
      py::arg("level"), py::arg("graph"), py::arg("legs") = BoundaryColoring{}, py::arg("ell") = py::none());
  m.def(
      "is_indefinite_some_embedding",
      [](const Level& l, const TrivalentGraph& g, const BoundaryColoring& b) {
        const auto r = is_indefinite_some_embedding(l, g, b);
        return std::pair{r.indefinite, r.witness};
      },
      py::arg("level"), py::arg("graph"), py::arg("legs") = BoundaryColoring{});

  m.def(
      "verify",
      [](const std::string& suite, int p_max) {
        VerifyOptions o;
        o.p_max = p_max;
        const VerifyReport r = run_suite(suite, o);
        py::dict d;
        d["suite"] = r.suite;
        d["cases"] = r.records.size();
        d["matched"] = r.matched();
        d["mismatched"] = r.mismatched();
        d["ok"] = r.ok();
        return d;
      },
      py::arg("suite"), py::arg("p_max") = 16);
}
