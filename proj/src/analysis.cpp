#include "centralitylab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "centralitylab/error.hpp"

namespace centralitylab {

namespace {

void check_tau_inputs(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("kendall_tau: length mismatch");
  if (x.size() < 2) throw InvalidArgument("kendall_tau: need at least 2 values");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw InvalidArgument("kendall_tau: non-finite value");
    }
  }
}

std::int64_t tie_pairs(std::int64_t run) { return run * (run - 1) / 2; }

// Sorts v ascending and returns the number of strict inversions.
std::int64_t merge_count(std::vector<double>& v, std::vector<double>& buf, std::size_t lo,
                         std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = merge_count(v, buf, lo, mid) + merge_count(v, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += static_cast<std::int64_t>(mid - i);
      buf[k++] = v[j++];
    } else {
      buf[k++] = v[i++];
    }
  }
  while (i < mid) buf[k++] = v[i++];
  while (j < hi) buf[k++] = v[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

}  // namespace

PairCounts count_pairs(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] != x[b] ? x[a] < x[b] : y[a] < y[b];
  });

  PairCounts c;
  c.pairs = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  std::int64_t joint = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && x[order[j]] == x[order[i]]) ++j;
    c.ties_x += tie_pairs(static_cast<std::int64_t>(j - i));
    for (std::size_t a = i; a < j;) {
      std::size_t b = a;
      while (b < j && y[order[b]] == y[order[a]]) ++b;
      joint += tie_pairs(static_cast<std::int64_t>(b - a));
      a = b;
    }
    i = j;
  }

  std::vector<double> ys(n), buf(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
  c.discordant = merge_count(ys, buf, 0, n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && ys[j] == ys[i]) ++j;
    c.ties_y += tie_pairs(static_cast<std::int64_t>(j - i));
    i = j;
  }
  c.concordant = c.pairs - c.ties_x - c.ties_y + joint - c.discordant;
  return c;
}

PairCounts count_pairs_naive(std::span<const double> x, std::span<const double> y) {
  PairCounts c;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++c.pairs;
      const bool tx = x[i] == x[j];
      const bool ty = y[i] == y[j];
      if (tx) ++c.ties_x;
      if (ty) ++c.ties_y;
      if (tx || ty) continue;
      if ((x[i] < x[j]) == (y[i] < y[j])) {
        ++c.concordant;
      } else {
        ++c.discordant;
      }
    }
  }
  return c;
}

double tau_from_counts(const PairCounts& c, TauVariant variant) {
  const auto numerator = static_cast<double>(c.concordant - c.discordant);
  if (variant == TauVariant::A) return numerator / static_cast<double>(c.pairs);
  const double denom = std::sqrt(static_cast<double>(c.pairs - c.ties_x) *
                                 static_cast<double>(c.pairs - c.ties_y));
  // A constant vector has no ordering information.
  return denom > 0.0 ? numerator / denom : 0.0;
}

double kendall_tau(std::span<const double> x, std::span<const double> y, TauVariant variant) {
  check_tau_inputs(x, y);
  return tau_from_counts(count_pairs(x, y), variant);
}

double kendall_tau_naive(std::span<const double> x, std::span<const double> y, TauVariant variant) {
  check_tau_inputs(x, y);
  return tau_from_counts(count_pairs_naive(x, y), variant);
}

double CorrelationMatrix::at(Measure a, Measure b) const {
  const auto ia = std::find(measures.begin(), measures.end(), a);
  const auto ib = std::find(measures.begin(), measures.end(), b);
  if (ia == measures.end() || ib == measures.end()) {
    throw InvalidArgument("correlation matrix has no entry for the requested measure");
  }
  return values[static_cast<std::size_t>(ia - measures.begin())]
               [static_cast<std::size_t>(ib - measures.begin())];
}

CorrelationMatrix correlation_matrix(std::span<const NetworkScores> networks,
                                     std::span<const Measure> measures, TauVariant variant) {
  if (networks.empty()) throw InvalidArgument("correlation_matrix: no networks");
  const std::size_t k = measures.size();
  CorrelationMatrix m;
  m.measures.assign(measures.begin(), measures.end());
  m.values.assign(k, std::vector<double>(k, 0.0));

  for (const auto& net : networks) {
    std::vector<const ScoreVector*> vecs;
    for (Measure ms : measures) {
      auto it = net.scores.find(ms);
      if (it == net.scores.end()) {
        throw InvalidArgument("network '" + net.network + "' is missing measure " +
                              std::string(measure_name(ms)));
      }
      vecs.push_back(&it->second);
    }
    std::vector<std::vector<double>> tau(k, std::vector<double>(k, 1.0));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        tau[a][b] = tau[b][a] = kendall_tau(vecs[a]->scores, vecs[b]->scores, variant);
      }
    }
    m.networks.push_back(net.network);
    m.per_network.push_back(std::move(tau));
  }

  const double count = static_cast<double>(networks.size());
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      double sum = 0.0;
      for (const auto& t : m.per_network) sum += t[a][b];
      m.values[a][b] = sum / count;
    }
  }
  return m;
}

Dendrogram average_linkage(const std::vector<std::vector<double>>& distance,
                           std::vector<std::string> leaves) {
  const std::size_t n = distance.size();
  if (leaves.size() != n) throw InvalidArgument("average_linkage: label count mismatch");
  for (const auto& row : distance) {
    if (row.size() != n) throw InvalidArgument("average_linkage: matrix is not square");
  }

  Dendrogram tree;
  tree.leaves = std::move(leaves);
  if (n == 0) return tree;

  // Cluster-to-cluster sums of leaf distances; linkage = sum / (|A| |B|).
  const std::size_t total = 2 * n - 1;
  std::vector<std::vector<double>> sum(total, std::vector<double>(total, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sum[i][j] = distance[i][j];
  }
  std::vector<std::size_t> size(total, 1);
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), std::size_t{0});

  while (active.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t ba = 0, bb = 0;
    // `active` stays sorted, so the first strict minimum is the lexicographic one.
    for (std::size_t x = 0; x < active.size(); ++x) {
      for (std::size_t y = x + 1; y < active.size(); ++y) {
        const std::size_t a = active[x], b = active[y];
        const double d = sum[a][b] / static_cast<double>(size[a] * size[b]);
        if (d < best) {
          best = d;
          ba = a;
          bb = b;
        }
      }
    }
    const std::size_t id = n + tree.merges.size();
    size[id] = size[ba] + size[bb];
    for (std::size_t c : active) {
      if (c == ba || c == bb) continue;
      sum[id][c] = sum[c][id] = sum[ba][c] + sum[bb][c];
    }
    tree.merges.push_back({ba, bb, best, size[id]});
    std::erase_if(active, [&](std::size_t c) { return c == ba || c == bb; });
    active.push_back(id);
  }

  std::vector<std::size_t> stack{total - 1};
  while (!stack.empty()) {
    const std::size_t c = stack.back();
    stack.pop_back();
    if (c < n) {
      tree.leaf_order.push_back(c);
    } else {
      const auto& mg = tree.merges[c - n];
      stack.push_back(mg.right);
      stack.push_back(mg.left);
    }
  }
  return tree;
}

Dendrogram average_linkage_clustering(const CorrelationMatrix& m) {
  const std::size_t k = m.measures.size();
  std::vector<std::vector<double>> dist(k, std::vector<double>(k, 0.0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) dist[a][b] = a == b ? 0.0 : 1.0 - m.values[a][b];
  }
  std::vector<std::string> names;
  for (Measure ms : m.measures) names.emplace_back(measure_name(ms));
  return average_linkage(dist, std::move(names));
}

double precision_at(std::span<const double> scores, std::span<const double> influence, double rho) {
  if (scores.size() != influence.size()) throw InvalidArgument("precision_at: length mismatch");
  if (scores.empty()) throw InvalidArgument("precision_at: empty input");
  if (!(rho > 0.0 && rho <= 1.0)) throw InvalidArgument("precision_at: rho must lie in (0, 1]");
  const std::size_t n = scores.size();
  // The epsilon keeps e.g. 0.29 * 100 from flooring to 28.
  const auto k = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(rho * static_cast<double>(n) + 1e-9)));
  const auto by_score = rank_nodes(scores);
  const auto by_influence = rank_nodes(influence);
  std::vector<bool> chosen(n, false);
  for (std::size_t i = 0; i < k; ++i) chosen[by_score[i]] = true;
  std::size_t overlap = 0;
  for (std::size_t i = 0; i < k; ++i) overlap += chosen[by_influence[i]] ? 1 : 0;
  return static_cast<double>(overlap) / static_cast<double>(k);
}

double top_L_avg_distance(const Graph& g, std::span<const NodeId> ranking, std::size_t top) {
  if (top < 2 || top > g.node_count() || top > ranking.size()) {
    throw InvalidArgument("top_L_avg_distance: L must satisfy 2 <= L <= N");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < top; ++i) {
    const auto dist = bfs_distances(g, ranking[i]);
    for (std::size_t j = i + 1; j < top; ++j) {
      const Distance d = dist[ranking[j]];
      if (d == kUnreachable) throw DisconnectedGraph();
      total += static_cast<double>(d);
    }
  }
  const double l = static_cast<double>(top);
  return 2.0 * total / (l * (l - 1.0));
}

double top_L_avg_distance(const Graph& g, const ScoreVector& scores, std::size_t top) {
  return top_L_avg_distance(g, scores.ranking, top);
}

std::vector<NodeId> greedy_seed_set(const ScoreVector& scores, std::size_t size) {
  if (size < 1 || size > scores.ranking.size()) {
    throw InvalidArgument("greedy_seed_set: size must lie in [1, N]");
  }
  return {scores.ranking.begin(), scores.ranking.begin() + static_cast<std::ptrdiff_t>(size)};
}

std::vector<double> mean_over_networks(const std::vector<std::vector<double>>& per_network) {
  if (per_network.empty()) return {};
  const std::size_t k = per_network.front().size();
  std::vector<double> out(k, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t m = 0; m < k; ++m) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& row : per_network) {
      if (!std::isnan(row[m])) {
        sum += row[m];
        ++count;
      }
    }
    if (count > 0) out[m] = sum / static_cast<double>(count);
  }
  return out;
}

std::vector<double> mean_over_networks(const std::vector<std::vector<std::vector<double>>>& per_network,
                                       std::size_t grid_index) {
  std::vector<std::vector<double>> slice;
  slice.reserve(per_network.size());
  for (const auto& net : per_network) {
    std::vector<double> row;
    row.reserve(net.size());
    for (const auto& curve : net) row.push_back(curve.at(grid_index));
    slice.push_back(std::move(row));
  }
  return mean_over_networks(slice);
}

namespace {

std::vector<std::size_t> descending_order(const std::vector<double>& values) {
  for (double v : values) {
    if (std::isnan(v)) throw InvalidArgument("task_rankings: a measure has no task value");
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  return order;
}

}  // namespace

TaskRankings task_rankings(const TaskResult& results, std::size_t seed_set_size) {
  const auto it = std::find(results.seed_grid.begin(), results.seed_grid.end(), seed_set_size);
  if (it == results.seed_grid.end()) {
    throw InvalidArgument("task_rankings: seed-set size " + std::to_string(seed_set_size) +
                          " is not on the grid");
  }
  const auto grid_index = static_cast<std::size_t>(it - results.seed_grid.begin());
  const auto single_values = mean_over_networks(results.influence_tau);
  const auto set_values = mean_over_networks(results.infection_rate, grid_index);
  const auto single = descending_order(single_values);
  const auto sets = descending_order(set_values);

  TaskRankings out;
  for (std::size_t p = 0; p < results.measures.size(); ++p) {
    out.single_node.push_back(results.measures[single[p]]);
    out.seed_set.push_back(results.measures[sets[p]]);
  }
  // On the values, so measures tied in either task count as tied pairs.
  out.tau = kendall_tau(single_values, set_values);
  return out;
}

}  // namespace centralitylab
