#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "centralitylab/centrality.hpp"
#include "centralitylab/graph.hpp"

namespace centralitylab {

enum class TauVariant {
  /// 2 (n+ - n-) / (N (N - 1)); tied pairs stay in the denominator.
  A,
  /// (n+ - n-) / sqrt((n0 - n1)(n0 - n2)), tie-corrected.
  B,
};

/// Concordant / discordant pair counts and tie counts of two vectors.
struct PairCounts {
  std::int64_t pairs = 0;        // n0 = N(N-1)/2
  std::int64_t concordant = 0;   // n+
  std::int64_t discordant = 0;   // n-
  std::int64_t ties_x = 0;       // pairs tied in x (including joint ties)
  std::int64_t ties_y = 0;       // pairs tied in y (including joint ties)
};

/// O(N log N) pair counting: sort by (x, y), then count y-inversions with a
/// merge sort.
PairCounts count_pairs(std::span<const double> x, std::span<const double> y);

/// O(N^2) enumeration of every pair; the reference for count_pairs.
PairCounts count_pairs_naive(std::span<const double> x, std::span<const double> y);

double tau_from_counts(const PairCounts& c, TauVariant variant = TauVariant::A);

/// Kendall's tau. Throws on length mismatch, N < 2 or non-finite values.
double kendall_tau(std::span<const double> x, std::span<const double> y,
                   TauVariant variant = TauVariant::A);
double kendall_tau_naive(std::span<const double> x, std::span<const double> y,
                         TauVariant variant = TauVariant::A);

/// Scores of every measure for one network.
struct NetworkScores {
  std::string network;
  std::map<Measure, ScoreVector> scores;
};

/// Cross-network averaged tau between measures.
struct CorrelationMatrix {
  std::vector<Measure> measures;
  /// values[a][b] = mean over networks of per_network[g][a][b].
  std::vector<std::vector<double>> values;
  std::vector<std::string> networks;
  std::vector<std::vector<std::vector<double>>> per_network;

  double at(Measure a, Measure b) const;
};

/// Averages per-network Kendall tau over all networks for every measure pair.
/// Throws naming the network and measure if a score vector is missing.
CorrelationMatrix correlation_matrix(std::span<const NetworkScores> networks,
                                     std::span<const Measure> measures = kAllMeasures,
                                     TauVariant variant = TauVariant::A);

/// Agglomerative clustering result. Leaves are 0..n-1; merge k creates
/// cluster n + k.
struct Dendrogram {
  struct Merge {
    std::size_t left;
    std::size_t right;
    double height;
    std::size_t size;
  };
  std::vector<std::string> leaves;
  std::vector<Merge> merges;
  std::vector<std::size_t> leaf_order;
};

/// UPGMA on a symmetric dissimilarity matrix. Among equally close pairs the
/// one with the lexicographically smallest (min id, max id) merges first.
Dendrogram average_linkage(const std::vector<std::vector<double>>& distance,
                           std::vector<std::string> leaves);

/// UPGMA on 1 - tau.
Dendrogram average_linkage_clustering(const CorrelationMatrix& m);

/// Overlap of the top max(1, floor(rho N)) nodes by score and by influence.
double precision_at(std::span<const double> scores, std::span<const double> influence, double rho);

/// Mean pairwise hop distance among the first `top` nodes of `ranking`.
/// Needs 2 <= top <= N and all of them in one component.
double top_L_avg_distance(const Graph& g, std::span<const NodeId> ranking, std::size_t top);
double top_L_avg_distance(const Graph& g, const ScoreVector& scores, std::size_t top);

/// The first L nodes of the score vector's ranking. The CI score vector is
/// built from the adaptive removal order, so this is the adaptive prefix.
std::vector<NodeId> greedy_seed_set(const ScoreVector& scores, std::size_t size);

/// Per-network, per-measure results of the spreading and dispersion tasks.
/// Grids are shared by every network; NaN marks a grid point that was not
/// evaluated.
struct TaskResult {
  std::vector<Measure> measures;
  std::vector<std::string> networks;
  std::vector<double> rho_grid;
  std::vector<std::size_t> seed_grid;
  std::vector<std::size_t> distance_grid;
  /// [network][measure][rho]
  std::vector<std::vector<std::vector<double>>> precision;
  /// [network][measure]
  std::vector<std::vector<double>> influence_tau;
  /// [network][measure][seed-set size]
  std::vector<std::vector<std::vector<double>>> infection_rate;
  /// [network][measure][L]
  std::vector<std::vector<std::vector<double>>> top_distance;
};

/// Mean over networks (NaNs skipped) of a per-network per-measure value.
std::vector<double> mean_over_networks(const std::vector<std::vector<double>>& per_network);
std::vector<double> mean_over_networks(const std::vector<std::vector<std::vector<double>>>& per_network,
                                       std::size_t grid_index);

struct TaskRankings {
  /// Measures by descending mean tau(C, I).
  std::vector<Measure> single_node;
  /// Measures by descending mean infection rate at the chosen seed-set size.
  std::vector<Measure> seed_set;
  /// Kendall tau between the per-measure values of the two tasks.
  double tau = 0.0;
};

/// Compares the measure orders of the two spreading tasks, using the
/// infection rate at seed-set size `seed_set_size` (must be in the grid).
TaskRankings task_rankings(const TaskResult& results, std::size_t seed_set_size = 50);

}  // namespace centralitylab
