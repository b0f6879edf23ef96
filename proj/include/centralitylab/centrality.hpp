#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "centralitylab/graph.hpp"

namespace centralitylab {

/// The sixteen node centrality measures.
enum class Measure {
  DC,
  Katz,
  Closeness,
  Betweenness,
  Eccentricity,
  EC,
  IC,
  SC,
  LC,
  Coreness,
  MDD,
  LDD,
  LocalRank,
  CI,
  HIndex,
  CR,
};

inline constexpr std::size_t kMeasureCount = 16;

inline constexpr std::array<Measure, kMeasureCount> kAllMeasures{
    Measure::DC,  Measure::Katz,     Measure::Closeness, Measure::Betweenness,
    Measure::Eccentricity, Measure::EC, Measure::IC, Measure::SC,
    Measure::LC,  Measure::Coreness, Measure::MDD, Measure::LDD,
    Measure::LocalRank, Measure::CI, Measure::HIndex, Measure::CR};

std::string_view measure_name(Measure m) noexcept;
/// Accepts the short names ("DC", "H-index", ...), case-insensitively.
std::optional<Measure> parse_measure(std::string_view name);

/// Measure parameters. Unset Katz alpha means 0.85 / lambda_1.
struct MeasureParams {
  std::optional<double> katz_alpha;
  double mdd_mu = 0.7;
  int ci_radius = 2;
  int cr_max_cycle = 10;
  double ec_tolerance = 1e-10;
  int ec_max_iterations = 100000;
  /// Dense cubic-time measures (Katz, IC, SC) refuse larger graphs.
  std::size_t dense_node_ceiling = 20000;
  /// Report subgraph centrality multiplied by exp(-lambda_1) (same ranking,
  /// no overflow). Turn off to get the raw closed-walk sums.
  bool sc_shift = true;

  /// Throws InvalidArgument if any value is out of range.
  void validate() const;
  /// Canonical text of the parameters that affect `m`, used for cache keys.
  std::string signature(Measure m) const;
};

/// Per-node scores of one measure plus the deterministic ranking.
struct ScoreVector {
  Measure measure = Measure::DC;
  std::vector<double> scores;
  /// Node indices by descending score, ties by ascending index.
  std::vector<NodeId> ranking;

  std::size_t size() const noexcept { return scores.size(); }
};

/// Descending by score, ties ascending by index. Throws on non-finite input.
std::vector<NodeId> rank_nodes(std::span<const double> scores);

/// Wraps raw scores into a ScoreVector with its ranking filled in.
ScoreVector make_score_vector(Measure m, std::vector<double> scores);

ScoreVector degree_centrality(const Graph& g);
/// Solves (I - alpha A) x = alpha A 1. Pass no alpha for 0.85 / lambda_1.
ScoreVector katz(const Graph& g, std::optional<double> alpha = std::nullopt,
                 std::size_t dense_node_ceiling = 20000);
ScoreVector closeness(const Graph& g);
ScoreVector betweenness(const Graph& g);
ScoreVector eccentricity(const Graph& g);
/// Power iteration on A + I (same eigenvectors, no bipartite oscillation);
/// stops when successive unit-norm iterates differ by < tolerance in max norm.
ScoreVector eigenvector_centrality(const Graph& g, double tolerance = 1e-10,
                                   int max_iterations = 100000);
ScoreVector information_centrality(const Graph& g, std::size_t dense_node_ceiling = 20000);
ScoreVector subgraph_centrality(const Graph& g, bool shift = true,
                                std::size_t dense_node_ceiling = 20000);
ScoreVector leverage_centrality(const Graph& g);
ScoreVector coreness(const Graph& g);
ScoreVector mixed_degree_decomposition(const Graph& g, double mu = 0.7);
ScoreVector lowest_degree_decomposition(const Graph& g);
ScoreVector localrank(const Graph& g);
ScoreVector h_index(const Graph& g);
ScoreVector cycle_ratio(const Graph& g, int max_cycle_length = 10);

/// Static collective influence (k_i - 1) * sum over the radius-`radius`
/// sphere of (k_j - 1).
ScoreVector collective_influence_scores(const Graph& g, int radius = 2);

/// Adaptive CI: pick the max-CI node (ties by index), remove it, update CI
/// near the removed node, repeat until `top_count` nodes are picked.
std::vector<NodeId> collective_influence_ranking(const Graph& g, int radius, std::size_t top_count);

/// Full adaptive CI ranking turned into scores N - position (position 0 is
/// the first node removed).
ScoreVector collective_influence(const Graph& g, int radius = 2);

/// Largest adjacency eigenvalue via a dense symmetric eigensolver.
double spectral_radius(const Graph& g);

/// Dispatches to the measure with the given parameters.
ScoreVector compute_measure(const Graph& g, Measure m, const MeasureParams& params = {});

}  // namespace centralitylab
