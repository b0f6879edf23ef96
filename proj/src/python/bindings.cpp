#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cmath>
#include <string>
#include <vector>

#include "centralitylab/analysis.hpp"
#include "centralitylab/centrality.hpp"
#include "centralitylab/graph.hpp"
#include "centralitylab/pipeline.hpp"
#include "centralitylab/sir.hpp"

namespace py = pybind11;
using namespace centralitylab;

namespace {

Measure measure_from(const std::string& name) {
  auto m = parse_measure(name);
  if (!m) throw InvalidArgument("unknown measure: " + name);
  return *m;
}

SirConfig sir_config(double beta, std::size_t runs, std::uint64_t seed, std::size_t workers) {
  SirConfig c;
  c.beta = beta;
  c.runs = runs;
  c.master_seed = seed;
  c.workers = workers;
  return c;
}

py::dict stats_dict(const GraphStats& s) {
  py::dict d;
  d["nodes"] = s.nodes;
  d["edges"] = s.edges;
  d["mean_degree"] = s.mean_degree;
  d["mean_square_degree"] = s.mean_square_degree;
  d["density"] = s.density;
  d["clustering"] = s.clustering;
  return d;
}

py::dict report_dict(const ExperimentReport& r) {
  py::dict d;
  py::list networks;
  for (const auto& n : r.networks) {
    py::dict row = stats_dict(n.stats);
    row["name"] = n.name;
    row["file"] = n.file;
    row["beta"] = n.beta;
    networks.append(row);
  }
  py::list failures;
  for (const auto& f : r.failures) failures.append(py::make_tuple(f.file, f.message));
  d["networks"] = networks;
  d["failures"] = failures;
  if (r.correlation) {
    std::vector<std::string> names;
    for (Measure m : r.correlation->measures) names.emplace_back(measure_name(m));
    d["measures"] = names;
    d["correlation"] = r.correlation->values;
  }
  if (r.rankings) {
    std::vector<std::string> single, seed_set;
    for (Measure m : r.rankings->single_node) single.emplace_back(measure_name(m));
    for (Measure m : r.rankings->seed_set) seed_set.emplace_back(measure_name(m));
    d["single_node_ranking"] = single;
    d["seed_set_ranking"] = seed_set;
    d["ranking_tau"] = r.rankings->tau;
  }
  d["cache_hits"] = r.cache_hits;
  d["cache_misses"] = r.cache_misses;
  d["content_hash"] = r.content_hash;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Node centrality measures, Kendall tau analysis and SIR spreading";
  m.attr("__version__") = std::string(kToolVersion);

  // Translators run newest first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
             for (auto [u, v] : edges)
               if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
             return Graph::from_edges(n, edges);
           }),
           py::arg("node_count"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_edge_list(std::string_view(text)); },
                  py::arg("text"), "Graph from edge-list text")
      .def_static("read", &read_edge_list_file, py::arg("path"))
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("labels", &Graph::labels)
      .def("edges", &Graph::edges)
      .def("degree", [](const Graph& g, NodeId v) {
        if (v >= g.node_count()) throw InvalidArgument("node out of range");
        return g.degree(v);
      }, py::arg("node"))
      .def("neighbors", [](const Graph& g, NodeId v) {
        if (v >= g.node_count()) throw InvalidArgument("node out of range");
        auto nb = g.neighbors(v);
        return std::vector<NodeId>(nb.begin(), nb.end());
      })
      .def("content_hash", &Graph::content_hash)
      .def("__len__", &Graph::node_count)
      .def("__repr__", [](const Graph& g) {
        return "<Graph N=" + std::to_string(g.node_count()) + " M=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("giant_component", &giant_component, py::arg("graph"));
  m.def("is_connected", &is_connected, py::arg("graph"));
  m.def("graph_stats", [](const Graph& g) { return stats_dict(graph_stats(g)); }, py::arg("graph"));
  m.def("epidemic_threshold", [](const Graph& g) { return epidemic_threshold(graph_stats(g)); }, py::arg("graph"));

  m.def("measure_names", [] {
    std::vector<std::string> names;
    for (Measure x : kAllMeasures) names.emplace_back(measure_name(x));
    return names;
  });
  m.def(
      "compute_measure",
      [](const Graph& g, const std::string& name, std::optional<double> katz_alpha, double mdd_mu, int ci_radius,
         int cr_max_cycle, bool sc_shift) {
        MeasureParams p;
        p.katz_alpha = katz_alpha;
        p.mdd_mu = mdd_mu;
        p.ci_radius = ci_radius;
        p.cr_max_cycle = cr_max_cycle;
        p.sc_shift = sc_shift;
        p.validate();
        return compute_measure(g, measure_from(name), p).scores;
      },
      py::arg("graph"), py::arg("measure"), py::kw_only(), py::arg("katz_alpha") = py::none(),
      py::arg("mdd_mu") = 0.7, py::arg("ci_radius") = 2, py::arg("cr_max_cycle") = 10, py::arg("sc_shift") = true,
      "Scores of one measure, indexed like graph.labels");
  m.def("rank_nodes", [](const std::vector<double>& s) { return rank_nodes(s); }, py::arg("scores"),
        "Node indices by descending score, ties by index");

  m.def(
      "kendall_tau",
      [](const std::vector<double>& x, const std::vector<double>& y, const std::string& variant) {
        if (variant != "a" && variant != "b") throw InvalidArgument("variant must be 'a' or 'b'");
        return kendall_tau(x, y, variant == "a" ? TauVariant::A : TauVariant::B);
      },
      py::arg("x"), py::arg("y"), py::arg("variant") = "a");

  m.def(
      "simulate",
      [](const Graph& g, const std::vector<NodeId>& seeds, double beta, std::size_t runs, std::uint64_t seed,
         std::size_t workers) {
        const auto out = simulate(g, seeds, sir_config(beta, runs, seed, workers));
        py::dict d;
        d["recovered"] = out.recovered;
        d["mean"] = out.mean;
        d["stddev"] = out.stddev;
        d["standard_error"] = out.standard_error();
        return d;
      },
      py::arg("graph"), py::arg("seeds"), py::arg("beta"), py::arg("runs") = 1000, py::arg("seed") = 42,
      py::arg("workers") = 1, "Synchronous SIR with recovery after one step");
  m.def(
      "node_influence",
      [](const Graph& g, NodeId node, double beta, std::size_t runs, std::uint64_t seed, std::size_t workers) {
        return node_influence(g, node, sir_config(beta, runs, seed, workers));
      },
      py::arg("graph"), py::arg("node"), py::arg("beta"), py::arg("runs") = 1000, py::arg("seed") = 42,
      py::arg("workers") = 1);
  m.def(
      "seedset_infection_rate",
      [](const Graph& g, const std::vector<NodeId>& seeds, double beta, std::size_t runs, std::uint64_t seed,
         std::size_t workers) { return seedset_infection_rate(g, seeds, sir_config(beta, runs, seed, workers)); },
      py::arg("graph"), py::arg("seeds"), py::arg("beta"), py::arg("runs") = 1000, py::arg("seed") = 42,
      py::arg("workers") = 1);

  m.def(
      "run_corpus",
      [](const std::filesystem::path& corpus, const std::filesystem::path& out, std::optional<double> beta,
         std::size_t runs, std::uint64_t seed, std::vector<double> rho_grid, std::vector<std::size_t> l_grid,
         std::size_t ranking_seed_size, bool giant_component, std::size_t workers, bool quiet) {
        ExperimentConfig cfg;
        cfg.corpus = corpus;
        cfg.out_dir = out;
        if (beta) {
          cfg.beta_mode = BetaMode::Fixed;
          cfg.beta = *beta;
        }
        cfg.runs = runs;
        cfg.master_seed = seed;
        if (!rho_grid.empty()) cfg.rho_grid = std::move(rho_grid);
        if (!l_grid.empty()) cfg.l_grid = std::move(l_grid);
        cfg.ranking_seed_size = ranking_seed_size;
        cfg.giant_component = giant_component;
        cfg.workers = workers;
        cfg.quiet = quiet;
        ExperimentReport r;
        {
          py::gil_scoped_release release;
          r = run_corpus(cfg);
        }
        return report_dict(r);
      },
      py::arg("corpus"), py::arg("out"), py::kw_only(), py::arg("beta") = py::none(), py::arg("runs") = 1000,
      py::arg("seed") = 42, py::arg("rho_grid") = std::vector<double>{}, py::arg("l_grid") = std::vector<std::size_t>{},
      py::arg("ranking_seed_size") = 50, py::arg("giant_component") = true, py::arg("workers") = 1,
      py::arg("quiet") = true,
      "Every stage over a corpus; writes artifacts to `out` and returns a summary. beta=None uses the threshold.");
}
