// Cycle ratio over each node's shortest cycles.
//
// A shortest cycle through i is made of two geodesics from i: for odd
// length 2d+1 they end at the two endpoints of an edge between nodes at
// distance d; for even length 2d they meet at a node at distance d. The two
// geodesics must share nothing but their ends, and since every node sits at
// a fixed BFS level it suffices to compare them level by level.

#include <algorithm>
#include <set>

#include "centralitylab/centrality.hpp"
#include "common.hpp"

namespace centralitylab {

namespace {

using Path = std::vector<NodeId>;  // path[k] is at distance k from the root

class GeodesicCycles {
 public:
  GeodesicCycles(const Graph& g, int max_length)
      : g_(g), max_length_(max_length), dist_(g.node_count(), kUnreachable),
        memo_(g.node_count()), memo_ready_(g.node_count(), false) {}

  // All shortest cycles through `root` of length <= max_length, each as a
  // sorted vertex list. Empty if no such cycle exists.
  std::vector<Path> shortest_cycles(NodeId root) {
    reset();
    root_ = root;
    bfs(static_cast<Distance>(max_length_ / 2));
    std::vector<Path> found;
    for (int len = 3; len <= max_length_ && found.empty(); ++len) {
      const auto depth = static_cast<Distance>(len / 2);
      if (depth >= levels_.size()) break;
      if (len % 2 == 1) {
        odd_cycles(depth, found);
      } else {
        even_cycles(depth, found);
      }
    }
    return found;
  }

 private:
  void reset() {
    for (auto& level : levels_) {
      for (NodeId v : level) {
        dist_[v] = kUnreachable;
        memo_ready_[v] = false;
        memo_[v].clear();
      }
    }
    levels_.clear();
  }

  void bfs(Distance max_depth) {
    dist_[root_] = 0;
    levels_.push_back({root_});
    while (levels_.size() <= max_depth) {
      const Distance d = static_cast<Distance>(levels_.size());
      std::vector<NodeId> next;
      for (NodeId u : levels_.back()) {
        for (NodeId v : g_.neighbors(u)) {
          if (dist_[v] == kUnreachable) {
            dist_[v] = d;
            next.push_back(v);
          }
        }
      }
      if (next.empty()) break;
      levels_.push_back(std::move(next));
    }
  }

  const std::vector<Path>& geodesics(NodeId v) {
    if (memo_ready_[v]) return memo_[v];
    std::vector<Path> out;
    if (v == root_) {
      out.push_back({root_});
    } else {
      for (NodeId p : g_.neighbors(v)) {
        if (dist_[p] == kUnreachable || dist_[p] + 1 != dist_[v]) continue;
        for (const Path& prefix : geodesics(p)) {
          Path path = prefix;
          path.push_back(v);
          out.push_back(std::move(path));
        }
      }
    }
    memo_[v] = std::move(out);
    memo_ready_[v] = true;
    return memo_[v];
  }

  static bool disjoint(const Path& a, const Path& b, std::size_t from, std::size_t to) {
    for (std::size_t k = from; k < to; ++k) {
      if (a[k] == b[k]) return false;
    }
    return true;
  }

  static Path vertex_set(const Path& a, const Path& b, std::size_t shared_tail) {
    Path cycle(a);
    cycle.insert(cycle.end(), b.begin() + 1, b.end() - static_cast<std::ptrdiff_t>(shared_tail));
    std::sort(cycle.begin(), cycle.end());
    return cycle;
  }

  void odd_cycles(Distance depth, std::vector<Path>& found) {
    for (NodeId u : levels_[depth]) {
      for (NodeId v : g_.neighbors(u)) {
        if (v <= u || dist_[v] != depth) continue;
        const auto& pu = geodesics(u);
        const auto& pv = geodesics(v);
        for (const Path& a : pu) {
          for (const Path& b : pv) {
            if (disjoint(a, b, 1, depth + 1)) found.push_back(vertex_set(a, b, 0));
          }
        }
      }
    }
  }

  void even_cycles(Distance depth, std::vector<Path>& found) {
    for (NodeId w : levels_[depth]) {
      const auto& paths = geodesics(w);
      for (std::size_t x = 0; x < paths.size(); ++x) {
        for (std::size_t y = x + 1; y < paths.size(); ++y) {
          if (disjoint(paths[x], paths[y], 1, depth)) found.push_back(vertex_set(paths[x], paths[y], 1));
        }
      }
    }
  }

  const Graph& g_;
  int max_length_;
  NodeId root_ = 0;
  std::vector<Distance> dist_;
  std::vector<std::vector<NodeId>> levels_;
  std::vector<std::vector<Path>> memo_;
  std::vector<bool> memo_ready_;
};

}  // namespace

ScoreVector cycle_ratio(const Graph& g, int max_cycle_length) {
  detail::require_nodes(g);
  if (max_cycle_length < 3) throw InvalidArgument("CR maximum cycle length must be >= 3");
  const std::size_t n = g.node_count();

  std::set<Path> cycles;
  GeodesicCycles finder(g, max_cycle_length);
  for (NodeId i = 0; i < n; ++i) {
    if (g.degree(i) < 2) continue;
    for (auto& c : finder.shortest_cycles(i)) cycles.insert(std::move(c));
  }

  // c_ii and the off-diagonal c_ij as sorted (i, j) keys.
  std::vector<double> diag(n, 0.0);
  std::vector<std::uint64_t> pairs;
  for (const Path& c : cycles) {
    for (NodeId a : c) {
      diag[a] += 1.0;
      for (NodeId b : c) {
        if (a != b) pairs.push_back((static_cast<std::uint64_t>(a) << 32) | b);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<double> scores(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    if (diag[i] > 0.0) scores[i] = 1.0;  // j = i term
  }
  for (std::size_t k = 0; k < pairs.size();) {
    std::size_t run = k;
    while (run < pairs.size() && pairs[run] == pairs[k]) ++run;
    const auto i = static_cast<NodeId>(pairs[k] >> 32);
    const auto j = static_cast<NodeId>(pairs[k] & 0xffffffffu);
    scores[i] += static_cast<double>(run - k) / diag[j];
    k = run;
  }
  return make_score_vector(Measure::CR, std::move(scores));
}

}  // namespace centralitylab
