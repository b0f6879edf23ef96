// Shell decompositions: k-core (coreness), mixed degree (MDD) and lowest
// degree (LDD).

#include <algorithm>
#include <functional>
#include <queue>

#include "centralitylab/centrality.hpp"
#include "common.hpp"

namespace centralitylab {

// Batagelj-Zaversnik bucket peeling, O(M).
ScoreVector coreness(const Graph& g) {
  detail::require_nodes(g);
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n), pos(n), vert(n);
  std::size_t max_deg = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (auto d : deg) ++bin[d];
  std::size_t start = 0;
  for (auto& b : bin) {
    const auto count = b;
    b = start;
    start += count;
  }
  for (NodeId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<NodeId>(vert[i]);
    for (NodeId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const std::size_t du = deg[u];
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const auto w = static_cast<NodeId>(vert[pw]);
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  std::vector<double> scores(deg.begin(), deg.end());
  return make_score_vector(Measure::Coreness, std::move(scores));
}

// Each shell is the closure "remove while mixed degree <= M_min", which is
// exactly Steps (i)-(ii) since mixed degrees only fall as neighbours leave.
ScoreVector mixed_degree_decomposition(const Graph& g, double mu) {
  detail::require_nodes(g);
  if (!(mu >= 0.0 && mu <= 1.0)) throw InvalidArgument("MDD mu must lie in [0, 1]");
  // Mixed degrees are sums of small multiples of mu; absorb rounding noise.
  constexpr double kEps = 1e-9;
  const std::size_t n = g.node_count();

  struct Entry {
    double mixed;
    NodeId node;
    std::uint32_t version;
  };
  auto higher = [](const Entry& a, const Entry& b) {
    return a.mixed != b.mixed ? a.mixed > b.mixed : a.node > b.node;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(higher)> heap(higher);

  std::vector<std::size_t> remaining(n), exhausted(n, 0);
  std::vector<std::uint32_t> version(n, 0);
  std::vector<bool> alive(n, true);
  for (NodeId v = 0; v < n; ++v) {
    remaining[v] = g.degree(v);
    heap.push({static_cast<double>(remaining[v]), v, 0});
  }

  std::vector<double> scores(n, 0.0);
  auto pop_valid = [&]() -> bool {
    while (!heap.empty()) {
      const Entry& e = heap.top();
      if (alive[e.node] && e.version == version[e.node]) return true;
      heap.pop();
    }
    return false;
  };
  while (pop_valid()) {
    const double shell = heap.top().mixed;
    while (pop_valid() && heap.top().mixed <= shell + kEps) {
      const NodeId v = heap.top().node;
      heap.pop();
      alive[v] = false;
      scores[v] = shell;
      for (NodeId u : g.neighbors(v)) {
        if (!alive[u]) continue;
        --remaining[u];
        ++exhausted[u];
        const double mixed =
            static_cast<double>(remaining[u]) + mu * static_cast<double>(exhausted[u]);
        heap.push({mixed, u, ++version[u]});
      }
    }
  }
  return make_score_vector(Measure::MDD, std::move(scores));
}

// Round s removes every node currently at the minimum degree at once.
ScoreVector lowest_degree_decomposition(const Graph& g) {
  detail::require_nodes(g);
  const std::size_t n = g.node_count();
  using Entry = std::pair<std::size_t, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<std::size_t> deg(n);
  std::vector<bool> alive(n, true);
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    heap.emplace(deg[v], v);
  }
  auto pop_valid = [&]() -> bool {
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      if (alive[v] && d == deg[v]) return true;
      heap.pop();
    }
    return false;
  };

  std::vector<double> scores(n, 0.0);
  std::vector<NodeId> batch;
  double round = 0.0;
  while (pop_valid()) {
    const std::size_t lowest = heap.top().first;
    round += 1.0;
    batch.clear();
    while (pop_valid() && heap.top().first == lowest) {
      batch.push_back(heap.top().second);
      heap.pop();
    }
    for (NodeId v : batch) {
      alive[v] = false;
      scores[v] = round;
    }
    for (NodeId v : batch) {
      for (NodeId u : g.neighbors(v)) {
        if (alive[u]) heap.emplace(--deg[u], u);
      }
    }
  }
  return make_score_vector(Measure::LDD, std::move(scores));
}

}  // namespace centralitylab
