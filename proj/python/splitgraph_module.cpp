#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "splitgraph/cli.hpp"
#include "splitgraph/kirchhoff.hpp"
#include "splitgraph/splitting.hpp"
#include "splitgraph/structure.hpp"

namespace py = pybind11;
using namespace splitgraph;

namespace {

using EdgeTuple = std::tuple<std::string, std::string, std::string>;

Multigraph make_graph(const std::vector<EdgeTuple>& edges, const std::vector<std::string>& extra_vertices) {
  std::vector<Edge> es;
  VertexSet vs(extra_vertices.begin(), extra_vertices.end());
  for (const auto& [l, u, v] : edges) {
    es.push_back(Edge{l, u, v});
    vs.insert(u);
    vs.insert(v);
  }
  return Multigraph(std::vector<Vertex>(vs.begin(), vs.end()), es);
}

EdgeSet edge_set(const std::vector<std::string>& v) { return EdgeSet(v.begin(), v.end()); }

py::dict split_dict(const SplitReport& r) {
  py::dict d;
  d["configuration"] = std::vector<std::string>(r.configuration.begin(), r.configuration.end());
  d["splits"] = r.splits;
  d["shortcut"] = shortcut_name(r.shortcut);
  d["witness"] = r.witness ? py::object(py::str(r.witness->to_string())) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(splitgraph, m) {
  m.doc() = "Kirchhoff and Dodgson polynomials, splitting and forbidden minors of multigraphs";

  py::register_exception<ScaleError>(m, "ScaleError");
  py::register_exception<Error>(m, "Error");

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init(&make_graph), py::arg("edges"), py::arg("vertices") = std::vector<std::string>{})
      .def_property_readonly("vertices", &Multigraph::vertices)
      .def_property_readonly("edges",
                             [](const Multigraph& g) {
                               std::vector<EdgeTuple> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.label, e.u, e.v);
                               return out;
                             })
      .def("__len__", &Multigraph::num_edges)
      .def("__eq__", &Multigraph::operator==)
      .def("__str__", &print_graph)
      .def("__repr__", [](const Multigraph& g) {
        return "<Multigraph " + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) +
               " edges>";
      });

  m.def("parse_graph", &parse_graph);
  m.def("print_graph", &print_graph);
  m.def("load_graph", &load_graph);
  m.def("builtin", &builtin, py::arg("name"), py::arg("k") = -1);
  m.def("is_isomorphic", &is_isomorphic);
  m.def("canonical_form", py::overload_cast<const Multigraph&>(&canonical_form));

  m.def("kirchhoff_poly", [](const Multigraph& g) { return kirchhoff_poly(g).to_string(); });
  m.def(
      "dodgson",
      [](const Multigraph& g, const std::vector<std::string>& i, const std::vector<std::string>& j,
         const std::vector<std::string>& k) {
        return dodgson(IncidenceFixture(g), DodgsonSpec{edge_set(i), edge_set(j), edge_set(k)}).to_string();
      },
      py::arg("g"), py::arg("I"), py::arg("J"), py::arg("K") = std::vector<std::string>{});
  m.def(
      "five_invariant",
      [](const Multigraph& g, const std::vector<std::string>& e, bool raw) {
        if (e.size() != 5) throw Error("expected five edges");
        std::array<Label, 5> a{e[0], e[1], e[2], e[3], e[4]};
        IncidenceFixture fx(g);
        return (raw ? five_invariant_raw(fx, a) : five_invariant(fx, a)).to_string();
      },
      py::arg("g"), py::arg("edges"), py::arg("raw") = false);

  m.def(
      "config_splits",
      [](const Multigraph& g, const std::vector<std::string>& s, bool check) {
        SplitOptions o;
        o.check = check;
        return split_dict(config_splits(g, edge_set(s), o));
      },
      py::arg("g"), py::arg("config"), py::arg("check") = false);
  m.def(
      "graph_splits", [](const Multigraph& g) { return graph_splits(g); }, py::arg("g"));
  m.def(
      "nonsplitting_configs",
      [](const Multigraph& g, unsigned jobs) {
        SplitOptions o;
        o.jobs = jobs;
        std::vector<std::vector<std::string>> out;
        for (const EdgeSet& s : nonsplitting_configs(g, o)) out.emplace_back(s.begin(), s.end());
        return out;
      },
      py::arg("g"), py::arg("jobs") = 0);
  m.def("is_minor_minimal_nonsplitting", [](const Multigraph& g) { return is_minor_minimal_nonsplitting(g).minimal; });

  m.def("is_planar", [](const Multigraph& g) { return is_planar(g).has_value(); });
  m.def("planar_dual", py::overload_cast<const Multigraph&>(&planar_dual));
  m.def("has_minor", [](const Multigraph& g, const Multigraph& h) { return has_minor(g, h); });
  m.def("forbidden_minor_scan", &forbidden_minor_scan);
  m.def(
      "delta_y_family",
      [](const Multigraph& g, std::size_t cap) {
        std::vector<Multigraph> out;
        for (const auto& [f, h] : delta_y_family(g, cap)) out.push_back(h);
        return out;
      },
      py::arg("g"), py::arg("cap") = 5000);
  m.def("primitive_divergent", [](const Multigraph& g) { return primitive_divergent(g).divergent; });

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
