#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hlindex/analysis.hpp"
#include "hlindex/families.hpp"
#include "hlindex/graph.hpp"
#include "hlindex/io.hpp"
#include "hlindex/partition.hpp"
#include "hlindex/report.hpp"
#include "hlindex/spectral.hpp"

namespace py = pybind11;
using namespace hlindex;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(dump_json(j, 0));
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph::build(n, edges);
}

}  // namespace

PYBIND11_MODULE(_hlindex, m) {
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&from_edges), py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& text) { return decode_graph6(text); })
      .def_static("from_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
      })
      .def("graph6", &encode_graph6)
      .def("edge_list", &write_edge_list)
      .def("order", &Graph::order)
      .def("size", &Graph::edge_count)
      .def("degree", &Graph::degree)
      .def("max_degree", &Graph::max_degree)
      .def("neighbors", [](const Graph& g, int v) {
        const auto span = g.neighbors(v);
        return std::vector<int>(span.begin(), span.end());
      })
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("eigenvalues", [](const Graph& g) { return eigenvalues(g).values; }, py::arg("graph"));
  m.def("hl_index", [](const Graph& g) { return to_python(to_json(hl_index(g))); }, py::arg("graph"));
  m.def("interlacing", [](const Graph& g, const std::vector<int>& removed) {
    return to_python(to_json(check_interlacing(g, removed)));
  }, py::arg("graph"), py::arg("removed"));
  m.def("bound_report", [](const Graph& g) { return to_python(to_json(bound_report(g))); }, py::arg("graph"));
  m.def("median_window", [](const Graph& g) { return to_python(to_json(median_window(g))); }, py::arg("graph"));
  m.def("ball_packing", [](const Graph& g, int radius, double threshold) {
    return to_python(to_json(ball_packing_count(g, radius, threshold)));
  }, py::arg("graph"), py::arg("radius"), py::arg("threshold"));
  m.def("converse_packing", [](const Graph& g) { return to_python(to_json(converse_packing(g))); },
        py::arg("graph"));
  m.def("is_planar_subcubic", [](const Graph& g) { return is_planar_subcubic(g); }, py::arg("graph"));
  m.def("conjecture_scan", [](int n_max, double threshold) {
    return to_python(to_json(conjecture_scan(n_max, threshold)));
  }, py::arg("n_max"), py::arg("threshold") = 1.0);
  m.def("extremal_search", [](int degree, int n, int iterations, std::uint64_t seed) {
    const ExtremalReport r = extremal_search(degree, n, iterations, seed);
    return py::make_tuple(r.best, r.best_R);
  }, py::arg("degree"), py::arg("n"), py::arg("iterations"), py::arg("seed") = 0);

  m.def("certify", [](const Graph& g, int budget, std::uint64_t seed) -> py::object {
    const CertifyResult r = certify(g, budget, seed);
    py::dict out;
    out["method"] = r.method;
    out["restarts"] = r.restarts;
    out["certificate"] = r.certificate ? py::cast(write_certificate(*r.certificate)) : py::none();
    return out;
  }, py::arg("graph"), py::arg("budget") = kDefaultBudget, py::arg("seed") = 0);
  m.def("verify_certificate", [](const Graph& g, const std::string& text) {
    return to_python(to_json(verify_certificate(g, parse_certificate(text))));
  }, py::arg("graph"), py::arg("certificate"));

  m.def("pg2_incidence", &pg2_incidence, py::arg("p"), py::arg("k") = 1);
  m.def("cycle_with_pendants", [](const std::vector<int>& lengths) { return cycle_with_pendants(lengths); },
        py::arg("lengths"));
  m.def("named", [](const std::string& name) { return named(name); }, py::arg("name"));
  m.def("random_cubic", &random_cubic, py::arg("n"), py::arg("seed") = 0);
  m.def("enumerate_subcubic", &enumerate_subcubic, py::arg("n"), py::arg("connected_only") = true);
}
