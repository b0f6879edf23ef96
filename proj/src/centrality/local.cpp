// Neighbourhood measures: degree, leverage, H-index, LocalRank and
// collective influence.

#include <algorithm>
#include <functional>
#include <queue>

#include "centralitylab/centrality.hpp"
#include "common.hpp"

namespace centralitylab {

ScoreVector degree_centrality(const Graph& g) {
  detail::require_nodes(g);
  const double denom = static_cast<double>(g.node_count() - 1);
  std::vector<double> scores(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) scores[v] = static_cast<double>(g.degree(v)) / denom;
  return make_score_vector(Measure::DC, std::move(scores));
}

ScoreVector leverage_centrality(const Graph& g) {
  detail::require_nodes(g);
  std::vector<double> scores(g.node_count(), 0.0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double ki = static_cast<double>(g.degree(i));
    if (ki == 0.0) continue;
    double acc = 0.0;
    for (NodeId j : g.neighbors(i)) {
      const double kj = static_cast<double>(g.degree(j));
      acc += (ki - kj) / (ki + kj);
    }
    scores[i] = acc / ki;
  }
  return make_score_vector(Measure::LC, std::move(scores));
}

ScoreVector h_index(const Graph& g) {
  detail::require_nodes(g);
  std::vector<double> scores(g.node_count());
  std::vector<std::size_t> degs;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    degs.clear();
    for (NodeId j : g.neighbors(i)) degs.push_back(g.degree(j));
    std::sort(degs.begin(), degs.end(), std::greater<>());
    std::size_t h = 0;
    while (h < degs.size() && degs[h] >= h + 1) ++h;
    scores[i] = static_cast<double>(h);
  }
  return make_score_vector(Measure::HIndex, std::move(scores));
}

ScoreVector localrank(const Graph& g) {
  detail::require_nodes(g);
  const std::size_t n = g.node_count();
  // r(u): distinct nodes within two hops of u, u itself excluded.
  std::vector<double> r(n);
  std::vector<NodeId> stamp(n, static_cast<NodeId>(n));
  for (NodeId u = 0; u < n; ++u) {
    std::size_t count = 0;
    stamp[u] = u;
    for (NodeId v : g.neighbors(u)) {
      if (stamp[v] != u) {
        stamp[v] = u;
        ++count;
      }
      for (NodeId w : g.neighbors(v)) {
        if (stamp[w] != u) {
          stamp[w] = u;
          ++count;
        }
      }
    }
    r[u] = static_cast<double>(count);
  }
  std::vector<double> q(n, 0.0);
  for (NodeId j = 0; j < n; ++j) {
    for (NodeId u : g.neighbors(j)) q[j] += r[u];
  }
  std::vector<double> scores(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j : g.neighbors(i)) scores[i] += q[j];
  }
  return make_score_vector(Measure::LocalRank, std::move(scores));
}

namespace {

// Collective influence on the subgraph of alive nodes with the given degrees.
class CiState {
 public:
  CiState(const Graph& g, int radius)
      : g_(g), radius_(radius), alive_(g.node_count(), true), degree_(g.node_count()),
        stamp_(g.node_count(), 0) {
    for (NodeId v = 0; v < g.node_count(); ++v) degree_[v] = static_cast<std::int64_t>(g.degree(v));
  }

  std::int64_t value(NodeId i) {
    if (degree_[i] <= 1) return 0;
    std::int64_t boundary = 0;
    for (NodeId j : ball(i, radius_, /*sphere_only=*/true)) boundary += degree_[j] - 1;
    return (degree_[i] - 1) * boundary;
  }

  // Alive nodes at distance <= radius (or exactly radius) from `center`,
  // excluding the center.
  const std::vector<NodeId>& ball(NodeId center, int radius, bool sphere_only) {
    ++epoch_;
    frontier_.assign(1, center);
    stamp_[center] = epoch_;
    result_.clear();
    for (int depth = 1; depth <= radius && !frontier_.empty(); ++depth) {
      next_.clear();
      for (NodeId u : frontier_) {
        for (NodeId v : g_.neighbors(u)) {
          if (!alive_[v] || stamp_[v] == epoch_) continue;
          stamp_[v] = epoch_;
          next_.push_back(v);
        }
      }
      if (!sphere_only || depth == radius) result_.insert(result_.end(), next_.begin(), next_.end());
      frontier_.swap(next_);
    }
    return result_;
  }

  void remove(NodeId v) {
    alive_[v] = false;
    for (NodeId u : g_.neighbors(v)) {
      if (alive_[u]) --degree_[u];
    }
  }

  bool alive(NodeId v) const { return alive_[v]; }

 private:
  const Graph& g_;
  int radius_;
  std::vector<bool> alive_;
  std::vector<std::int64_t> degree_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<NodeId> frontier_, next_, result_;
};

}  // namespace

ScoreVector collective_influence_scores(const Graph& g, int radius) {
  detail::require_nodes(g);
  if (radius < 1) throw InvalidArgument("CI radius must be >= 1");
  CiState state(g, radius);
  std::vector<double> scores(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) scores[v] = static_cast<double>(state.value(v));
  return make_score_vector(Measure::CI, std::move(scores));
}

std::vector<NodeId> collective_influence_ranking(const Graph& g, int radius, std::size_t top_count) {
  detail::require_nodes(g);
  if (radius < 1) throw InvalidArgument("CI radius must be >= 1");
  const std::size_t n = g.node_count();
  if (top_count < 1 || top_count > n) throw InvalidArgument("CI ranking: top_count must be in [1, N]");

  struct Entry {
    std::int64_t ci;
    NodeId node;
    std::uint32_t version;
  };
  // Max-heap on CI, ties to the smaller index.
  auto lower = [](const Entry& a, const Entry& b) {
    return a.ci != b.ci ? a.ci < b.ci : a.node > b.node;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> heap(lower);
  std::vector<std::uint32_t> version(n, 0);
  CiState state(g, radius);
  for (NodeId v = 0; v < n; ++v) heap.push({state.value(v), v, 0});

  std::vector<NodeId> ranking;
  ranking.reserve(top_count);
  std::vector<NodeId> affected;
  while (ranking.size() < top_count) {
    const Entry top = heap.top();
    heap.pop();
    if (!state.alive(top.node) || top.version != version[top.node]) continue;
    ranking.push_back(top.node);
    const auto& near = state.ball(top.node, radius + 1, /*sphere_only=*/false);
    affected.assign(near.begin(), near.end());
    state.remove(top.node);
    for (NodeId v : affected) heap.push({state.value(v), v, ++version[v]});
  }
  return ranking;
}

ScoreVector collective_influence(const Graph& g, int radius) {
  const auto order = collective_influence_ranking(g, radius, g.node_count());
  std::vector<double> scores(g.node_count());
  const double n = static_cast<double>(g.node_count());
  for (std::size_t pos = 0; pos < order.size(); ++pos) scores[order[pos]] = n - static_cast<double>(pos);
  return make_score_vector(Measure::CI, std::move(scores));
}

}  // namespace centralitylab
