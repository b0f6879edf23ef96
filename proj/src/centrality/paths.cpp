// Shortest-path measures: one BFS per source, O(NM) overall.

#include <algorithm>
#include <numeric>

#include "centralitylab/centrality.hpp"
#include "common.hpp"

namespace centralitylab {

ScoreVector closeness(const Graph& g) {
  detail::require_connected(g);
  const std::size_t n = g.node_count();
  std::vector<double> scores(n);
  for (NodeId s = 0; s < n; ++s) {
    const auto dist = bfs_distances(g, s);
    const double total = std::accumulate(dist.begin(), dist.end(), 0.0);
    scores[s] = static_cast<double>(n - 1) / total;
  }
  return make_score_vector(Measure::Closeness, std::move(scores));
}

ScoreVector eccentricity(const Graph& g) {
  detail::require_connected(g);
  const std::size_t n = g.node_count();
  std::vector<double> scores(n);
  for (NodeId s = 0; s < n; ++s) {
    const auto dist = bfs_distances(g, s);
    scores[s] = 1.0 / static_cast<double>(*std::max_element(dist.begin(), dist.end()));
  }
  return make_score_vector(Measure::Eccentricity, std::move(scores));
}

// Brandes dependency accumulation. Every unordered (s, t) pair is visited
// twice, so the ordered-pair sum is scaled by 1 / ((N-1)(N-2)).
ScoreVector betweenness(const Graph& g) {
  detail::require_connected(g);
  const std::size_t n = g.node_count();
  std::vector<double> bc(n, 0.0);
  std::vector<double> sigma(n), delta(n);
  std::vector<Distance> dist(n);
  std::vector<NodeId> order;
  order.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), kUnreachable);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId u = order[head];
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1;
          order.push_back(v);
        }
        if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : g.neighbors(w)) {
        if (dist[v] + 1 == dist[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) bc[w] += delta[w];
    }
  }

  if (n > 2) {
    const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
    for (double& b : bc) b *= scale;
  }
  return make_score_vector(Measure::Betweenness, std::move(bc));
}

}  // namespace centralitylab
