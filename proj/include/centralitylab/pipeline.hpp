#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "centralitylab/analysis.hpp"
#include "centralitylab/centrality.hpp"
#include "centralitylab/error.hpp"
#include "centralitylab/graph.hpp"

namespace centralitylab {

inline constexpr const char* kToolVersion = "0.1.0";

enum class BetaMode { Threshold, Fixed };

struct ExperimentConfig {
  /// Directory of edge-list files, or a single edge-list file.
  std::filesystem::path corpus;
  std::filesystem::path out_dir = "results";
  MeasureParams params;
  BetaMode beta_mode = BetaMode::Threshold;
  /// Used when beta_mode is Fixed.
  double beta = 0.1;
  std::size_t runs = 1000;
  std::uint64_t master_seed = 42;
  std::vector<double> rho_grid{0.01, 0.02, 0.05, 0.10, 0.15, 0.20};
  std::vector<std::size_t> l_grid{1, 5, 10, 20, 30, 40, 50};
  /// Seed-set size whose infection rate orders the measures.
  std::size_t ranking_seed_size = 50;
  bool giant_component = true;
  std::size_t workers = 1;
  /// Suppress progress lines on stderr.
  bool quiet = false;

  /// Grids non-empty and strictly ascending, runs >= 1, parameters valid.
  void validate() const;
  /// Everything that influences results (not the output path or workers).
  std::string canonical() const;
};

/// Which parts of the experiment to run.
struct Stages {
  bool scores = true;
  bool correlate = true;
  bool single_node = true;
  bool seed_set = true;
  bool dispersion = true;

  static Stages all() { return {}; }
  static Stages stats_only() { return {false, false, false, false, false}; }
};

struct NetworkSummary {
  std::string name;
  std::string file;
  std::size_t original_nodes = 0;
  GraphStats stats;
  std::uint64_t graph_hash = 0;
  /// SIR infection probability used for this network (NaN if no SIR stage).
  double beta = 0.0;
  std::string scores_file;
};

struct Failure {
  std::string file;
  std::string message;
};

struct ExperimentReport {
  std::vector<NetworkSummary> networks;
  std::vector<Failure> failures;
  std::optional<CorrelationMatrix> correlation;
  std::optional<Dendrogram> dendrogram;
  std::optional<TaskResult> tasks;
  std::optional<TaskRankings> rankings;

  std::size_t cache_hits = 0;
  std::size_t cache_misses = 0;
  /// Fresh recomputation of one cached (network, measure) pair.
  struct CacheCheck {
    std::string network;
    std::string measure;
    bool match = true;
  };
  std::optional<CacheCheck> cache_check;

  std::string config_hash;
  std::uint64_t master_seed = 0;
  std::string generated_at;
  /// Digest of every emitted artifact except the timestamp.
  std::string content_hash;
};

/// Thrown when no network of the corpus could be processed.
class CorpusFailure : public Error {
 public:
  CorpusFailure(std::string what, std::vector<Failure> failures)
      : Error(std::move(what)), failures_(std::move(failures)) {}
  const std::vector<Failure>& failures() const noexcept { return failures_; }

 private:
  std::vector<Failure> failures_;
};

/// Edge-list files of the corpus in name order (a file path yields itself).
std::vector<std::filesystem::path> list_corpus(const std::filesystem::path& corpus);

/// Parses a network file and optionally reduces it to its giant component.
Graph load_network(const std::filesystem::path& file, bool giant);

/// Runs the requested stages over the corpus, writes every artifact into
/// cfg.out_dir and returns the in-memory report. Per-network errors land in
/// `failures`; if every network fails, CorpusFailure is thrown (after
/// failures.json has been written).
ExperimentReport run_corpus(const ExperimentConfig& cfg, const Stages& stages = Stages::all());

/// Score CSV: node_label then one column per measure, full precision.
std::string scores_csv(const Graph& g, const std::vector<ScoreVector>& columns);

/// Table-2 style row set: name,N,M,mean_degree,density,clustering.
std::string stats_csv(const std::vector<NetworkSummary>& rows);

/// Computes (or loads from `<cache_dir>`) one measure's scores.
ScoreVector cached_measure(const Graph& g, Measure m, const MeasureParams& params,
                           const std::filesystem::path& cache_dir, bool* hit = nullptr);

}  // namespace centralitylab
