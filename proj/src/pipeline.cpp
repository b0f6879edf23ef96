#include "centralitylab/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "centralitylab/parallel.hpp"
#include "centralitylab/sir.hpp"

namespace centralitylab {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}

void log_line(const ExperimentConfig& cfg, const std::string& msg) {
  if (cfg.quiet) return;
  std::lock_guard lock(log_mutex());
  std::cerr << "[centralitylab] " << msg << '\n';
}

// Cache writes from concurrent network jobs go through one commit point.
std::mutex& commit_mutex() {
  static std::mutex m;
  return m;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out) throw Error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Vectors of doubles keyed by (graph hash, description). The sidecar holds
// the full description so a hash collision reads as a miss.
class ValueCache {
 public:
  explicit ValueCache(fs::path dir) : dir_(std::move(dir)) {}

  std::optional<std::vector<double>> load(std::uint64_t graph_hash, const std::string& description,
                                          std::size_t expected) const {
    const auto [data, meta] = paths(graph_hash, description);
    const auto sidecar = read_file(meta);
    if (!sidecar) return std::nullopt;
    try {
      const auto j = json::parse(*sidecar);
      if (j.at("description").get<std::string>() != description) return std::nullopt;
      if (j.at("graph_hash").get<std::string>() != hex16(graph_hash)) return std::nullopt;
    } catch (const json::exception&) {
      return std::nullopt;
    }
    const auto body = read_file(data);
    if (!body) return std::nullopt;
    std::vector<double> values;
    std::istringstream in(*body);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      char* end = nullptr;
      const double v = std::strtod(line.c_str(), &end);
      if (end == line.c_str()) return std::nullopt;
      values.push_back(v);
    }
    if (values.size() != expected) return std::nullopt;
    return values;
  }

  void store(std::uint64_t graph_hash, const std::string& description,
             const std::vector<double>& values) const {
    const auto [data, meta] = paths(graph_hash, description);
    std::string body;
    for (double v : values) body += fmt(v) + '\n';
    json j;
    j["graph_hash"] = hex16(graph_hash);
    j["description"] = description;
    j["count"] = values.size();
    std::lock_guard lock(commit_mutex());
    write_file_atomic(data, body);
    write_file_atomic(meta, j.dump(2) + '\n');
  }

 private:
  std::pair<fs::path, fs::path> paths(std::uint64_t graph_hash, const std::string& description) const {
    const std::string stem = hex16(graph_hash) + "_" + hex16(fnv1a(description));
    return {dir_ / (stem + ".csv"), dir_ / (stem + ".json")};
  }

  fs::path dir_;
};

std::string sir_description(const SirConfig& sir) {
  return "beta=" + fmt(sir.beta) + ";runs=" + std::to_string(sir.runs) +
         ";seed=" + std::to_string(sir.master_seed);
}

struct NetworkJob {
  bool ok = false;
  Failure failure;
  NetworkSummary summary;
  Graph graph;
  std::vector<ScoreVector> scores;
  std::vector<std::vector<double>> precision;     // [measure][rho]
  std::vector<double> influence_tau;              // [measure]
  std::vector<std::vector<double>> rate;          // [measure][L]
  std::vector<std::vector<double>> distance;      // [measure][L]
  std::size_t hits = 0;
  std::size_t misses = 0;
};

bool needs_scores(const Stages& s) {
  return s.scores || s.correlate || s.single_node || s.seed_set || s.dispersion;
}

bool needs_sir(const Stages& s) { return s.single_node || s.seed_set; }

void process_network(NetworkJob& job, const fs::path& file, const ExperimentConfig& cfg,
                     const Stages& stages, const ValueCache& cache, std::size_t sir_workers) {
  const Graph raw = read_edge_list_file(file.string());
  job.summary.original_nodes = raw.node_count();
  job.graph = cfg.giant_component ? giant_component(raw) : raw;
  const Graph& g = job.graph;
  job.summary.stats = graph_stats(g);
  job.summary.graph_hash = g.content_hash();
  job.summary.beta = kNaN;
  const std::uint64_t gh = job.summary.graph_hash;
  const std::size_t n = g.node_count();

  if (!needs_scores(stages)) return;
  for (Measure m : kAllMeasures) {
    const std::string desc = "measure;" + cfg.params.signature(m);
    if (auto cached = cache.load(gh, desc, n)) {
      job.scores.push_back(make_score_vector(m, std::move(*cached)));
      ++job.hits;
    } else {
      job.scores.push_back(compute_measure(g, m, cfg.params));
      cache.store(gh, desc, job.scores.back().scores);
      ++job.misses;
    }
  }
  job.summary.scores_file = "scores/" + job.summary.name + ".csv";

  SirConfig sir;
  if (needs_sir(stages)) {
    sir.beta = cfg.beta_mode == BetaMode::Fixed ? cfg.beta : epidemic_threshold(job.summary.stats);
    sir.runs = cfg.runs;
    sir.master_seed = cfg.master_seed;
    sir.stream_salt = gh;
    sir.workers = sir_workers;
    sir.validate();
    job.summary.beta = sir.beta;
  }

  if (stages.single_node) {
    const std::string desc = "influence;" + sir_description(sir);
    std::vector<double> influence;
    if (auto cached = cache.load(gh, desc, n)) {
      influence = std::move(*cached);
      ++job.hits;
    } else {
      influence.resize(n);
      for (NodeId i = 0; i < n; ++i) influence[i] = node_influence(g, i, sir);
      cache.store(gh, desc, influence);
      ++job.misses;
    }
    for (const auto& sv : job.scores) {
      std::vector<double> row;
      for (double rho : cfg.rho_grid) row.push_back(precision_at(sv.scores, influence, rho));
      job.precision.push_back(std::move(row));
      job.influence_tau.push_back(kendall_tau(sv.scores, influence));
    }
  }

  if (stages.seed_set) {
    std::string grid;
    for (auto l : cfg.l_grid) grid += std::to_string(l) + ",";
    for (const auto& sv : job.scores) {
      const std::string desc = "rate;" + cfg.params.signature(sv.measure) + ";" +
                               sir_description(sir) + ";L=" + grid;
      if (auto cached = cache.load(gh, desc, cfg.l_grid.size())) {
        job.rate.push_back(std::move(*cached));
        ++job.hits;
        continue;
      }
      std::vector<double> row;
      for (std::size_t l : cfg.l_grid) {
        const auto seeds = greedy_seed_set(sv, std::min(l, n));
        row.push_back(seedset_infection_rate(g, seeds, sir));
      }
      cache.store(gh, desc, row);
      job.rate.push_back(std::move(row));
      ++job.misses;
    }
  }

  if (stages.dispersion) {
    for (const auto& sv : job.scores) {
      std::vector<double> row;
      for (std::size_t l : cfg.l_grid) {
        const std::size_t top = std::min(l, n);
        row.push_back(top >= 2 ? top_L_avg_distance(g, sv, top) : kNaN);
      }
      job.distance.push_back(std::move(row));
    }
  }
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> measure_names(const std::vector<Measure>& ms) {
  std::vector<std::string> out;
  for (Measure m : ms) out.emplace_back(measure_name(m));
  return out;
}

std::string correlation_csv(const CorrelationMatrix& m) {
  std::string s = "measure";
  for (Measure a : m.measures) s += "," + std::string(measure_name(a));
  s += '\n';
  for (std::size_t i = 0; i < m.measures.size(); ++i) {
    s += measure_name(m.measures[i]);
    for (std::size_t j = 0; j < m.measures.size(); ++j) s += "," + fmt(m.values[i][j]);
    s += '\n';
  }
  return s;
}

json dendrogram_json(const Dendrogram& d) {
  json j;
  j["leaves"] = d.leaves;
  j["merges"] = json::array();
  for (const auto& m : d.merges) {
    j["merges"].push_back({{"left", m.left}, {"right", m.right}, {"height", m.height}, {"size", m.size}});
  }
  std::vector<std::string> order;
  for (auto i : d.leaf_order) order.push_back(d.leaves[i]);
  j["leaf_order"] = order;
  return j;
}

template <typename Grid>
std::string long_csv(const std::string& grid_name, const TaskResult& r, const Grid& grid,
                     const std::vector<std::vector<std::vector<double>>>& values) {
  std::string s = "network,measure," + grid_name + ",value\n";
  for (std::size_t g = 0; g < r.networks.size(); ++g) {
    for (std::size_t m = 0; m < r.measures.size(); ++m) {
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double v = values[g][m][k];
        if (std::isnan(v)) continue;
        std::string point;
        if constexpr (std::is_floating_point_v<typename Grid::value_type>) {
          point = fmt(grid[k]);
        } else {
          point = std::to_string(grid[k]);
        }
        s += r.networks[g] + "," + std::string(measure_name(r.measures[m])) + "," + point + "," +
             fmt(v) + "\n";
      }
    }
  }
  return s;
}

json failures_json(const std::vector<Failure>& failures) {
  json j = json::array();
  for (const auto& f : failures) j.push_back({{"file", f.file}, {"error", f.message}});
  return j;
}

}  // namespace

void ExperimentConfig::validate() const {
  params.validate();
  if (runs < 1) throw InvalidArgument("runs must be >= 1");
  if (beta_mode == BetaMode::Fixed && !(beta >= 0.0 && beta <= 1.0)) {
    throw InvalidArgument("beta must lie in [0, 1]");
  }
  if (rho_grid.empty()) throw InvalidArgument("rho grid must not be empty");
  if (l_grid.empty()) throw InvalidArgument("L grid must not be empty");
  for (std::size_t i = 0; i < rho_grid.size(); ++i) {
    if (!(rho_grid[i] > 0.0 && rho_grid[i] <= 1.0)) throw InvalidArgument("rho values must lie in (0, 1]");
    if (i > 0 && !(rho_grid[i] > rho_grid[i - 1])) throw InvalidArgument("rho grid must be sorted ascending");
  }
  for (std::size_t i = 0; i < l_grid.size(); ++i) {
    if (l_grid[i] < 1) throw InvalidArgument("L values must be >= 1");
    if (i > 0 && !(l_grid[i] > l_grid[i - 1])) throw InvalidArgument("L grid must be sorted ascending");
  }
  if (workers < 1) throw InvalidArgument("workers must be >= 1");
}

std::string ExperimentConfig::canonical() const {
  std::string s;
  s += "tool=" + std::string(kToolVersion) + "\n";
  for (Measure m : kAllMeasures) s += "measure=" + params.signature(m) + "\n";
  s += "dense_node_ceiling=" + std::to_string(params.dense_node_ceiling) + "\n";
  s += std::string("beta_mode=") + (beta_mode == BetaMode::Fixed ? "fixed" : "threshold") + "\n";
  if (beta_mode == BetaMode::Fixed) s += "beta=" + fmt(beta) + "\n";
  s += "runs=" + std::to_string(runs) + "\n";
  s += "seed=" + std::to_string(master_seed) + "\n";
  s += "rho_grid=";
  for (double r : rho_grid) s += fmt(r) + ",";
  s += "\nl_grid=";
  for (auto l : l_grid) s += std::to_string(l) + ",";
  s += "\nranking_seed_size=" + std::to_string(ranking_seed_size) + "\n";
  s += std::string("giant_component=") + (giant_component ? "1" : "0") + "\n";
  return s;
}

std::vector<fs::path> list_corpus(const fs::path& corpus) {
  if (fs::is_regular_file(corpus)) return {corpus};
  if (!fs::is_directory(corpus)) throw InvalidArgument("corpus not found: " + corpus.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(corpus)) {
    if (!e.is_regular_file()) continue;
    const std::string name = e.path().filename().string();
    if (name.empty() || name[0] == '.') continue;
    files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

Graph load_network(const fs::path& file, bool giant) {
  Graph g = read_edge_list_file(file.string());
  return giant ? giant_component(g) : g;
}

std::string scores_csv(const Graph& g, const std::vector<ScoreVector>& columns) {
  std::string s = "node_label";
  for (const auto& c : columns) {
    if (c.size() != g.node_count()) throw InvalidArgument("score vector length differs from node count");
    s += "," + std::string(measure_name(c.measure));
  }
  s += '\n';
  for (NodeId i = 0; i < g.node_count(); ++i) {
    s += g.label(i);
    for (const auto& c : columns) s += "," + fmt(c.scores[i]);
    s += '\n';
  }
  return s;
}

std::string stats_csv(const std::vector<NetworkSummary>& rows) {
  std::string s = "name,N,M,mean_degree,density,clustering\n";
  for (const auto& r : rows) {
    s += r.name + "," + std::to_string(r.stats.nodes) + "," + std::to_string(r.stats.edges) + "," +
         fmt(r.stats.mean_degree) + "," + fmt(r.stats.density) + "," + fmt(r.stats.clustering) + "\n";
  }
  return s;
}

ScoreVector cached_measure(const Graph& g, Measure m, const MeasureParams& params,
                           const fs::path& cache_dir, bool* hit) {
  const ValueCache cache(cache_dir);
  const std::uint64_t gh = g.content_hash();
  const std::string desc = "measure;" + params.signature(m);
  if (auto cached = cache.load(gh, desc, g.node_count())) {
    if (hit) *hit = true;
    return make_score_vector(m, std::move(*cached));
  }
  if (hit) *hit = false;
  ScoreVector sv = compute_measure(g, m, params);
  cache.store(gh, desc, sv.scores);
  return sv;
}

ExperimentReport run_corpus(const ExperimentConfig& cfg, const Stages& stages) {
  cfg.validate();
  const auto files = list_corpus(cfg.corpus);
  if (files.empty()) throw InvalidArgument("corpus contains no files: " + cfg.corpus.string());
  const ValueCache cache(cfg.out_dir / "cache");

  std::vector<NetworkJob> jobs(files.size());
  {
    std::map<std::string, int> stem_count;
    for (const auto& f : files) ++stem_count[f.stem().string()];
    for (std::size_t i = 0; i < files.size(); ++i) {
      const std::string stem = files[i].stem().string();
      jobs[i].summary.name = stem_count[stem] > 1 ? files[i].filename().string() : stem;
      jobs[i].summary.file = files[i].filename().string();
    }
  }

  const std::size_t outer = std::min(cfg.workers, files.size());
  const std::size_t inner = std::max<std::size_t>(1, cfg.workers / outer);
  log_line(cfg, "corpus " + cfg.corpus.string() + ": " + std::to_string(files.size()) +
                    " file(s), workers " + std::to_string(outer) + "x" + std::to_string(inner));

  parallel_for(files.size(), outer, [&](std::size_t i) {
    NetworkJob& job = jobs[i];
    try {
      process_network(job, files[i], cfg, stages, cache, inner);
      job.ok = true;
      log_line(cfg, job.summary.name + ": N=" + std::to_string(job.summary.stats.nodes) +
                        " M=" + std::to_string(job.summary.stats.edges) + " done");
    } catch (const std::exception& e) {
      job = NetworkJob{};
      job.failure = {files[i].filename().string(), e.what()};
      log_line(cfg, files[i].filename().string() + ": FAILED: " + e.what());
    }
  });

  ExperimentReport report;
  report.master_seed = cfg.master_seed;
  report.config_hash = hex16(fnv1a(cfg.canonical()));
  std::vector<const NetworkJob*> ok;
  for (const auto& job : jobs) {
    if (job.ok) {
      ok.push_back(&job);
      report.networks.push_back(job.summary);
      report.cache_hits += job.hits;
      report.cache_misses += job.misses;
    } else {
      report.failures.push_back(job.failure);
    }
  }

  fs::create_directories(cfg.out_dir);
  if (ok.empty()) {
    write_file_atomic(cfg.out_dir / "failures.json", failures_json(report.failures).dump(2) + "\n");
    throw CorpusFailure("every network in the corpus failed", report.failures);
  }

  // Artifacts in a name-ordered map so the content digest is order-stable.
  std::map<std::string, std::string> artifacts;
  artifacts["stats.csv"] = stats_csv(report.networks);
  artifacts["failures.json"] = failures_json(report.failures).dump(2) + "\n";

  const std::vector<Measure> measures(kAllMeasures.begin(), kAllMeasures.end());
  if (needs_scores(stages)) {
    for (const auto* job : ok) artifacts[job->summary.scores_file] = scores_csv(job->graph, job->scores);

    // Spot check: one pseudo-randomly chosen (network, measure) recomputed fresh.
    const std::size_t net = mix64(cfg.master_seed) % ok.size();
    const std::size_t mi = mix64(cfg.master_seed ^ 0x9e3779b97f4a7c15ULL) % kMeasureCount;
    const ScoreVector fresh = compute_measure(ok[net]->graph, measures[mi], cfg.params);
    ExperimentReport::CacheCheck check{ok[net]->summary.name, std::string(measure_name(measures[mi])),
                                       fresh.scores == ok[net]->scores[mi].scores};
    if (!check.match) log_line(cfg, "cache check mismatch: " + check.network + " " + check.measure);
    report.cache_check = check;
  }

  if (stages.correlate) {
    std::vector<NetworkScores> ns;
    for (const auto* job : ok) {
      NetworkScores s{job->summary.name, {}};
      for (const auto& sv : job->scores) s.scores.emplace(sv.measure, sv);
      ns.push_back(std::move(s));
    }
    report.correlation = correlation_matrix(ns, measures);
    report.dendrogram = average_linkage_clustering(*report.correlation);
    artifacts["correlation.csv"] = correlation_csv(*report.correlation);
    artifacts["dendrogram.json"] = dendrogram_json(*report.dendrogram).dump(2) + "\n";
  }

  if (stages.single_node || stages.seed_set || stages.dispersion) {
    TaskResult r;
    r.measures = measures;
    r.rho_grid = cfg.rho_grid;
    r.seed_grid = cfg.l_grid;
    r.distance_grid = cfg.l_grid;
    for (const auto* job : ok) {
      r.networks.push_back(job->summary.name);
      r.precision.push_back(job->precision);
      r.influence_tau.push_back(job->influence_tau);
      r.infection_rate.push_back(job->rate);
      r.top_distance.push_back(job->distance);
    }
    if (stages.single_node) {
      artifacts["task1_precision.csv"] = long_csv("rho", r, r.rho_grid, r.precision);
      std::string s = "network,measure,value\n";
      for (std::size_t g = 0; g < r.networks.size(); ++g) {
        for (std::size_t m = 0; m < measures.size(); ++m) {
          s += r.networks[g] + "," + std::string(measure_name(measures[m])) + "," +
               fmt(r.influence_tau[g][m]) + "\n";
        }
      }
      artifacts["task1_tau.csv"] = s;
    }
    if (stages.seed_set) artifacts["task2_rr.csv"] = long_csv("L", r, r.seed_grid, r.infection_rate);
    if (stages.dispersion) artifacts["dispersion.csv"] = long_csv("L", r, r.distance_grid, r.top_distance);
    if (stages.single_node && stages.seed_set) {
      const auto& grid = cfg.l_grid;
      if (std::find(grid.begin(), grid.end(), cfg.ranking_seed_size) != grid.end()) {
        report.rankings = task_rankings(r, cfg.ranking_seed_size);
      } else {
        log_line(cfg, "task rankings skipped: seed-set size " + std::to_string(cfg.ranking_seed_size) +
                          " is not on the L grid");
      }
    }
    report.tasks = std::move(r);
  }

  json j;
  j["tool"] = {{"name", "centralitylab"}, {"version", kToolVersion}};
  j["provenance"] = {{"config_hash", report.config_hash},
                     {"tool_version", kToolVersion},
                     {"master_seed", cfg.master_seed},
                     {"config", cfg.canonical()}};
  json nets = json::array();
  for (const auto& s : report.networks) {
    nets.push_back({{"name", s.name},
                    {"file", s.file},
                    {"original_nodes", s.original_nodes},
                    {"nodes", s.stats.nodes},
                    {"edges", s.stats.edges},
                    {"mean_degree", s.stats.mean_degree},
                    {"mean_square_degree", s.stats.mean_square_degree},
                    {"density", s.stats.density},
                    {"clustering", s.stats.clustering},
                    {"graph_hash", hex16(s.graph_hash)},
                    {"beta", std::isnan(s.beta) ? json(nullptr) : json(s.beta)},
                    {"scores_file", s.scores_file.empty() ? json(nullptr) : json(s.scores_file)}});
  }
  j["networks"] = nets;
  json files_json = json::array();
  for (const auto& [name, body] : artifacts) files_json.push_back(name);
  j["artifacts"] = files_json;
  j["failures"] = report.failures.size();

  if (report.correlation) {
    const auto& c = *report.correlation;
    double sum = 0.0, lo = 1.0, hi = -1.0;
    std::size_t count = 0;
    for (std::size_t a = 0; a < c.measures.size(); ++a) {
      for (std::size_t b = a + 1; b < c.measures.size(); ++b) {
        sum += c.values[a][b];
        lo = std::min(lo, c.values[a][b]);
        hi = std::max(hi, c.values[a][b]);
        ++count;
      }
    }
    j["correlation"] = {{"file", "correlation.csv"},
                        {"dendrogram", "dendrogram.json"},
                        {"pairs", count},
                        {"mean", count ? sum / count : 0.0},
                        {"min", lo},
                        {"max", hi}};
  }
  if (report.tasks) {
    const auto& r = *report.tasks;
    json curves;
    auto per_measure = [&](const std::vector<double>& v) {
      json o;
      for (std::size_t m = 0; m < r.measures.size(); ++m) o[std::string(measure_name(r.measures[m]))] = v[m];
      return o;
    };
    auto grid_curves = [&](const std::vector<std::vector<std::vector<double>>>& values, std::size_t points) {
      json o;
      for (std::size_t m = 0; m < r.measures.size(); ++m) {
        json row = json::array();
        for (std::size_t k = 0; k < points; ++k) {
          const double v = mean_over_networks(values, k)[m];
          row.push_back(std::isnan(v) ? json(nullptr) : json(v));
        }
        o[std::string(measure_name(r.measures[m]))] = row;
      }
      return o;
    };
    if (stages.single_node) {
      curves["rho_grid"] = r.rho_grid;
      curves["precision"] = grid_curves(r.precision, r.rho_grid.size());
      curves["influence_tau"] = per_measure(mean_over_networks(r.influence_tau));
    }
    if (stages.seed_set || stages.dispersion) curves["l_grid"] = r.seed_grid;
    if (stages.seed_set) curves["infection_rate"] = grid_curves(r.infection_rate, r.seed_grid.size());
    if (stages.dispersion) curves["dispersion"] = grid_curves(r.top_distance, r.distance_grid.size());
    j["mean_curves"] = curves;
  }
  if (report.rankings) {
    j["task_rankings"] = {{"seed_set_size", cfg.ranking_seed_size},
                          {"single_node", measure_names(report.rankings->single_node)},
                          {"seed_set", measure_names(report.rankings->seed_set)},
                          {"tau", report.rankings->tau}};
  }
  if (report.cache_check) {
    j["cache_check"] = {{"network", report.cache_check->network},
                        {"measure", report.cache_check->measure},
                        {"match", report.cache_check->match}};
  }

  std::uint64_t digest = fnv1a(j.dump());
  for (const auto& [name, body] : artifacts) digest = fnv1a(body, fnv1a(name, digest));
  report.content_hash = hex16(digest);
  report.generated_at = utc_timestamp();
  j["content_hash"] = report.content_hash;
  // Run-specific values stay out of the digest.
  j["run"] = {{"generated_at", report.generated_at},
              {"cache_hits", report.cache_hits},
              {"cache_misses", report.cache_misses},
              {"workers", cfg.workers}};

  for (const auto& [name, body] : artifacts) write_file_atomic(cfg.out_dir / name, body);
  write_file_atomic(cfg.out_dir / "report.json", j.dump(2) + "\n");
  log_line(cfg, "wrote " + (cfg.out_dir / "report.json").string() + " (content " + report.content_hash +
                    ", " + std::to_string(report.failures.size()) + " failure(s))");
  return report;
}

}  // namespace centralitylab
