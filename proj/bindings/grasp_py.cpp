#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "grasp/metrics.hpp"
#include "grasp/rewiring.hpp"
#include "grasp/similarity.hpp"
#include "grasp/spectral.hpp"
#include "grasp/tudataset.hpp"

namespace py = pybind11;
using namespace grasp;

namespace {

py::dict metrics_to_dict(const StructuralMetrics& m) {
  py::dict d;
  for (const auto& name : metric_names()) {
    auto v = m.get(name);
    d[name.c_str()] = v ? py::object(py::float_(*v)) : py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_grasp, mod) {
  mod.doc() = "graph rewiring and structural metric toolkit";

  py::register_exception<InputError>(mod, "InputError");
  py::register_exception<EditError>(mod, "EditError");
  py::register_exception<IngestError>(mod, "IngestError");
  py::register_exception<FormatError>(mod, "FormatError");
  py::register_exception<ConfigError>(mod, "GraspConfigError");
  py::register_exception<DisconnectedError>(mod, "DisconnectedError");
  py::register_exception<MetricUndefined>(mod, "MetricUndefinedError");

  py::class_<Graph>(mod, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> e;
             for (auto [u, v] : edges) e.push_back(make_edge(u, v));
             return Graph(n, std::move(e));
           }),
           py::arg("num_nodes"), py::arg("edges"))
      .def_property_readonly("num_nodes", &Graph::num_nodes)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges",
                             [](const Graph& g) { return g.edges(); })
      .def("degree", &Graph::degree, py::arg("node"))
      .def("neighbors",
           [](const Graph& g, int v) { return g.neighbors(v); },
           py::arg("node"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_nodes()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  py::class_<DatasetBundle>(mod, "DatasetBundle")
      .def_readonly("name", &DatasetBundle::name)
      .def_readonly("graphs", &DatasetBundle::graphs)
      .def_readonly("labels", &DatasetBundle::labels);

  mod.def("load_tudataset", &load_tudataset, py::arg("directory"),
          py::arg("name"));

  mod.def(
      "apply_edits",
      [](const Graph& g, const std::vector<std::pair<int, int>>& additions,
         const std::vector<std::pair<int, int>>& removals) {
        std::vector<Edge> add, rem;
        for (auto [u, v] : additions) add.push_back(make_edge(u, v));
        for (auto [u, v] : removals) rem.push_back(make_edge(u, v));
        return apply_edits(g, add, rem);
      },
      py::arg("graph"), py::arg("additions"), py::arg("removals"));

  mod.def("compute_metrics",
          [](const Graph& g) { return metrics_to_dict(compute_all(g)); },
          py::arg("graph"));

  mod.def("spectral_gap", &spectral_gap, py::arg("graph"),
          py::arg("tol_zero") = 1e-8);

  mod.def(
      "total_resistance",
      [](const Graph& g) {
        auto r = total_and_average_resistance(g);
        return py::make_tuple(r.total, r.average, r.disconnected);
      },
      py::arg("graph"));

  mod.def("balanced_forman",
          [](const Graph& g, int u, int v) {
            return balanced_forman(g, make_edge(u, v));
          },
          py::arg("graph"), py::arg("u"), py::arg("v"));

  mod.def("ollivier_ricci",
          [](const Graph& g, int u, int v) {
            return ollivier_ricci(g, make_edge(u, v));
          },
          py::arg("graph"), py::arg("u"), py::arg("v"));

  mod.def(
      "rewire",
      [](const Graph& g, const std::string& method, int budget,
         std::uint64_t seed, const py::kwargs& kwargs) {
        RewireConfig cfg;
        cfg.method = parse_method(method);
        cfg.budget = budget;
        cfg.seed = seed;
        for (auto item : kwargs) {
          std::string key = py::cast<std::string>(item.first);
          if (key == "sdrf_temperature")
            cfg.sdrf_temperature = py::cast<double>(item.second);
          else if (key == "sdrf_removal_bound")
            cfg.sdrf_removal_bound = py::cast<double>(item.second);
          else if (key == "borf_batches")
            cfg.borf_batches = py::cast<int>(item.second);
          else if (key == "borf_add_per_batch")
            cfg.borf_add_per_batch = py::cast<int>(item.second);
          else if (key == "borf_remove_per_batch")
            cfg.borf_remove_per_batch = py::cast<int>(item.second);
          else if (key == "borf_keep_connected")
            cfg.borf_keep_connected = py::cast<bool>(item.second);
          else if (key == "laser_hop_radius")
            cfg.laser_hop_radius = py::cast<int>(item.second);
          else if (key == "laser_snapshots")
            cfg.laser_snapshots = py::cast<int>(item.second);
          else if (key == "laser_sample_fraction")
            cfg.laser_sample_fraction = py::cast<double>(item.second);
          else if (key == "digl_alpha")
            cfg.digl_alpha = py::cast<double>(item.second);
          else if (key == "digl_top_k")
            cfg.digl_top_k = py::cast<int>(item.second);
          else
            throw ConfigError("unknown rewire option '" + key + "'");
        }
        auto r = rewire(g, cfg);
        py::dict out;
        out["graph"] = r.graph;
        out["added"] = r.added;
        out["removed"] = r.removed;
        return out;
      },
      py::arg("graph"), py::arg("method"), py::arg("budget") = 50,
      py::arg("seed") = 0);

  mod.def(
      "similarity",
      [](const Graph& a, const Graph& b, double p) {
        auto r = similarity_report(a, b, p);
        py::dict d;
        d["jaccard"] = r.jaccard;
        d["laplacian_spectrum_dist"] = r.laplacian_spectrum_dist;
        d["adjacency_norm_dist"] = r.adjacency_norm_dist;
        d["degree_w1"] = r.degree_w1;
        d["sp_length_w1"] = r.sp_length_w1;
        return d;
      },
      py::arg("graph"), py::arg("other"), py::arg("p") = 2.0);

  mod.def("wasserstein1",
          [](const std::vector<double>& a, const std::vector<double>& b) {
            return wasserstein1({a}, {b});
          },
          py::arg("a"), py::arg("b"));
}
