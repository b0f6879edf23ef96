#pragma once

// Brute-force references for tests. Everything here works from the
// definitions on tiny graphs and shares no code with the library beyond the
// Graph container.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "centralitylab/graph.hpp"

namespace oracle {

using centralitylab::Graph;
using centralitylab::NodeId;
using Matrix = std::vector<std::vector<double>>;

inline Matrix adjacency(const Graph& g) {
  const std::size_t n = g.node_count();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1.0;
  return a;
}

inline std::vector<std::vector<bool>> adjacency_bool(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

inline std::vector<int> degrees(const Graph& g) {
  const auto a = adjacency_bool(g);
  std::vector<int> k(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) k[i] += a[i][j];
  return k;
}

// Every simple path between every ordered pair, kept only if shortest.
struct ShortestPaths {
  std::vector<std::vector<int>> dist;                      // -1 if unreachable
  std::vector<std::vector<std::vector<std::vector<int>>>> paths;  // [s][t] -> list of paths
};

inline ShortestPaths enumerate_shortest_paths(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto a = adjacency_bool(g);
  ShortestPaths sp;
  sp.dist.assign(n, std::vector<int>(n, -1));
  sp.paths.assign(n, std::vector<std::vector<std::vector<int>>>(n));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> path{static_cast<int>(s)};
    std::vector<bool> on(n, false);
    on[s] = true;
    std::function<void(int)> dfs = [&](int u) {
      const int t = u;
      const int len = static_cast<int>(path.size()) - 1;
      auto& d = sp.dist[s][t];
      if (d < 0 || len < d) {
        d = len;
        sp.paths[s][t].clear();
      }
      if (len == d) sp.paths[s][t].push_back(path);
      for (std::size_t v = 0; v < n; ++v) {
        if (!a[u][v] || on[v]) continue;
        on[v] = true;
        path.push_back(static_cast<int>(v));
        dfs(static_cast<int>(v));
        path.pop_back();
        on[v] = false;
      }
    };
    dfs(static_cast<int>(s));
  }
  return sp;
}

inline std::vector<double> betweenness(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto sp = enumerate_shortest_paths(g);
  std::vector<double> b(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      const auto& ps = sp.paths[s][t];
      for (std::size_t i = 0; i < n; ++i) {
        if (i == s || i == t) continue;
        std::size_t through = 0;
        for (const auto& p : ps) through += std::count(p.begin(), p.end(), static_cast<int>(i));
        b[i] += static_cast<double>(through) / static_cast<double>(ps.size());
      }
    }
  }
  if (n > 2) {
    for (auto& x : b) x /= static_cast<double>((n - 1) * (n - 2));
  }
  return b;
}

inline std::vector<double> closeness(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto sp = enumerate_shortest_paths(g);
  std::vector<double> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += sp.dist[i][j];
    c[i] = static_cast<double>(n - 1) / sum;
  }
  return c;
}

inline std::vector<double> eccentricity(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto sp = enumerate_shortest_paths(g);
  std::vector<double> e(n);
  for (std::size_t i = 0; i < n; ++i) {
    int m = 0;
    for (std::size_t j = 0; j < n; ++j) m = std::max(m, sp.dist[i][j]);
    e[i] = 1.0 / m;
  }
  return e;
}

// Cyclic Jacobi rotations; eigenvalues ascending with matching columns.
struct Eigen {
  std::vector<double> values;
  Matrix vectors;  // vectors[row][col], column k belongs to values[k]
};

inline Eigen jacobi(Matrix a) {
  const std::size_t n = a.size();
  Matrix v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a[x][x] < a[y][y]; });
  Eigen e;
  e.vectors.assign(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    e.values.push_back(a[order[k]][order[k]]);
    for (std::size_t r = 0; r < n; ++r) e.vectors[r][k] = v[r][order[k]];
  }
  return e;
}

inline double lambda_max(const Graph& g) { return jacobi(adjacency(g)).values.back(); }

inline std::vector<double> eigenvector(const Graph& g) {
  const auto e = jacobi(adjacency(g));
  const std::size_t n = g.node_count();
  std::vector<double> x(n);
  double norm = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = e.vectors[i][n - 1];
    norm += x[i] * x[i];
    sum += x[i];
  }
  const double scale = (sum < 0 ? -1.0 : 1.0) / std::sqrt(norm);
  for (auto& xi : x) xi *= scale;
  return x;
}

inline std::vector<double> mat_vec(const Matrix& a, const std::vector<double>& x) {
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

// sum_{k>=1} alpha^k A^k 1, summed until terms vanish (at least min_terms).
inline std::vector<double> katz_series(const Graph& g, double alpha, int min_terms = 50) {
  const auto a = adjacency(g);
  const std::size_t n = g.node_count();
  std::vector<double> term(n, 1.0), total(n, 0.0);
  for (int k = 1; k < 1000000; ++k) {
    term = mat_vec(a, term);
    double biggest = 0.0, largest_total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      term[i] *= alpha;
      total[i] += term[i];
      biggest = std::max(biggest, term[i]);
      largest_total = std::max(largest_total, total[i]);
    }
    if (k >= min_terms && biggest <= 1e-18 * largest_total) break;
  }
  return total;
}

// Diagonal of sum_l A^l / l!, optionally times exp(-lambda_max).
inline std::vector<double> subgraph_series(const Graph& g, bool shift, int min_terms = 20) {
  const auto a = adjacency(g);
  const std::size_t n = g.node_count();
  Matrix term(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) term[i][i] = 1.0;
  std::vector<double> total(n, 1.0);
  for (int l = 1; l < 400; ++l) {
    Matrix next(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (term[i][k] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += term[i][k] * a[k][j];
      }
    double biggest = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        next[i][j] /= l;
        biggest = std::max(biggest, next[i][j]);
      }
    term = std::move(next);
    for (std::size_t i = 0; i < n; ++i) total[i] += term[i][i];
    if (l >= min_terms && biggest < 1e-20) break;
  }
  if (shift) {
    const double f = std::exp(-lambda_max(g));
    for (auto& t : total) t *= f;
  }
  return total;
}

inline Matrix gauss_jordan_inverse(Matrix m) {
  const std::size_t n = m.size();
  Matrix inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    std::swap(m[c], m[pivot]);
    std::swap(inv[c], inv[pivot]);
    const double d = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// I_i = N / (N C_ii + T - 2 R_i), C = (D - A + J)^-1.
inline std::vector<double> information(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto a = adjacency(g);
  const auto k = degrees(g);
  Matrix b(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = (i == j ? k[i] : 0.0) - a[i][j] + 1.0;
  const auto c = gauss_jordan_inverse(b);
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += c[i][i];
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += c[i][j];
    out[i] = static_cast<double>(n) / (static_cast<double>(n) * c[i][i] + trace - 2.0 * row);
  }
  return out;
}

inline std::vector<double> degree_centrality(const Graph& g) {
  const auto k = degrees(g);
  std::vector<double> out;
  for (int x : k) out.push_back(static_cast<double>(x) / static_cast<double>(g.node_count() - 1));
  return out;
}

inline std::vector<double> leverage(const Graph& g) {
  const auto k = degrees(g);
  const auto a = adjacency_bool(g);
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (k[i] == 0) continue;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j]) s += static_cast<double>(k[i] - k[j]) / static_cast<double>(k[i] + k[j]);
    out[i] = s / k[i];
  }
  return out;
}

inline std::vector<double> h_index(const Graph& g) {
  const auto k = degrees(g);
  const auto a = adjacency_bool(g);
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int h = k[i]; h >= 0; --h) {
      int count = 0;
      for (std::size_t j = 0; j < n; ++j) count += a[i][j] && k[j] >= h;
      if (count >= h) {
        out[i] = h;
        break;
      }
    }
  }
  return out;
}

// Largest k such that the node survives repeated deletion of degree < k.
inline std::vector<double> coreness(const Graph& g) {
  const auto a = adjacency_bool(g);
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  for (int kk = 1; kk <= static_cast<int>(n); ++kk) {
    std::vector<bool> alive(n, true);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        int d = 0;
        for (std::size_t j = 0; j < n; ++j) d += alive[j] && a[i][j];
        if (d < kk) {
          alive[i] = false;
          changed = true;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i]) out[i] = kk;
  }
  return out;
}

inline std::vector<double> mixed_degree_decomposition(const Graph& g, double mu) {
  const auto a = adjacency_bool(g);
  const std::size_t n = g.node_count();
  std::vector<bool> alive(n, true);
  std::vector<double> out(n, 0.0);
  auto mixed = [&](std::size_t i) {
    int r = 0, e = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[i][j]) continue;
      (alive[j] ? r : e) += 1;
    }
    return r + mu * e;
  };
  std::size_t left = n;
  while (left > 0) {
    double shell = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i]) shell = std::min(shell, mixed(i));
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<std::size_t> batch;
      for (std::size_t i = 0; i < n; ++i)
        if (alive[i] && mixed(i) <= shell + 1e-9) batch.push_back(i);
      for (auto i : batch) {
        alive[i] = false;
        out[i] = shell;
        --left;
        changed = true;
      }
    }
  }
  return out;
}

inline std::vector<double> lowest_degree_decomposition(const Graph& g) {
  const auto a = adjacency_bool(g);
  const std::size_t n = g.node_count();
  std::vector<bool> alive(n, true);
  std::vector<double> out(n, 0.0);
  std::size_t left = n;
  for (int round = 1; left > 0; ++round) {
    std::vector<int> d(n, 0);
    int lowest = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = 0; j < n; ++j) d[i] += alive[j] && a[i][j];
      lowest = std::min(lowest, d[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (alive[i] && d[i] == lowest) {
        alive[i] = false;
        out[i] = round;
        --left;
      }
    }
  }
  return out;
}

inline std::vector<double> localrank(const Graph& g) {
  const auto a = adjacency_bool(g);
  const std::size_t n = g.node_count();
  std::vector<double> r(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    std::set<std::size_t> reach;
    for (std::size_t v = 0; v < n; ++v) {
      if (!a[u][v]) continue;
      reach.insert(v);
      for (std::size_t w = 0; w < n; ++w)
        if (a[v][w]) reach.insert(w);
    }
    reach.erase(u);
    r[u] = static_cast<double>(reach.size());
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (a[j][k]) out[i] += r[k];
  return out;
}

// (k_i - 1) * sum over nodes at exactly `radius` hops of (k_j - 1), with
// removed nodes deleted from the graph.
inline std::vector<double> ci_static(const std::vector<std::vector<bool>>& a, const std::vector<bool>& alive,
                                     int radius) {
  const std::size_t n = a.size();
  std::vector<int> k(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k[i] += alive[i] && alive[j] && a[i][j];
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    std::vector<int> dist(n, -1);
    dist[i] = 0;
    for (int step = 0; step < radius; ++step)
      for (std::size_t u = 0; u < n; ++u)
        if (dist[u] == step)
          for (std::size_t v = 0; v < n; ++v)
            if (alive[v] && a[u][v] && dist[v] < 0) dist[v] = step + 1;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (dist[j] == radius) s += k[j] - 1;
    out[i] = (k[i] - 1) * s;
  }
  return out;
}

inline std::vector<double> ci_static(const Graph& g, int radius) {
  return ci_static(adjacency_bool(g), std::vector<bool>(g.node_count(), true), radius);
}

// Recompute every CI after each removal; scores are N - position.
inline std::vector<NodeId> ci_adaptive_order(const Graph& g, int radius) {
  const auto a = adjacency_bool(g);
  const std::size_t n = g.node_count();
  std::vector<bool> alive(n, true);
  std::vector<NodeId> order;
  for (std::size_t step = 0; step < n; ++step) {
    const auto ci = ci_static(a, alive, radius);
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i] && (best == n || ci[i] > ci[best])) best = i;
    alive[best] = false;
    order.push_back(static_cast<NodeId>(best));
  }
  return order;
}

inline std::vector<double> ci_adaptive(const Graph& g, int radius) {
  const auto order = ci_adaptive_order(g, radius);
  const std::size_t n = g.node_count();
  std::vector<double> out(n);
  for (std::size_t p = 0; p < n; ++p) out[order[p]] = static_cast<double>(n - p);
  return out;
}

// Every simple cycle as a sorted vertex list (vertex sets of distinct simple
// cycles of a simple graph can coincide; keep distinct edge sequences).
inline std::vector<std::vector<int>> simple_cycles(const Graph& g, int max_len) {
  const auto a = adjacency_bool(g);
  const int n = static_cast<int>(g.node_count());
  std::set<std::vector<int>> seen;  // canonical rotation/reflection
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<bool> on(n, false);
  std::function<void(int, int)> dfs = [&](int start, int u) {
    for (int v = 0; v < n; ++v) {
      if (!a[u][v]) continue;
      if (v == start && path.size() >= 3) {
        // canonical form: start is the minimum; choose the smaller direction
        std::vector<int> fwd = path;
        std::vector<int> rev{path[0]};
        for (std::size_t i = path.size() - 1; i >= 1; --i) rev.push_back(path[i]);
        const auto& c = std::min(fwd, rev);
        if (seen.insert(c).second) cycles.push_back(c);
        continue;
      }
      if (v <= start || on[v] || static_cast<int>(path.size()) >= max_len) continue;
      on[v] = true;
      path.push_back(v);
      dfs(start, v);
      path.pop_back();
      on[v] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on[s] = true;
    dfs(s, s);
    on[s] = false;
  }
  return cycles;
}

// Union of every node's shortest cycles (as vertex sets), then
// CR_i = 1 + sum_{j != i} c_ij / c_jj, 0 for nodes on no cycle.
inline std::vector<double> cycle_ratio(const Graph& g, int max_len) {
  const std::size_t n = g.node_count();
  const auto cycles = simple_cycles(g, max_len);
  std::vector<std::size_t> girth(n, std::numeric_limits<std::size_t>::max());
  for (const auto& c : cycles)
    for (int v : c) girth[v] = std::min(girth[v], c.size());
  std::set<std::vector<int>> chosen;
  for (const auto& c : cycles) {
    bool shortest_for_some = false;
    for (int v : c) shortest_for_some |= c.size() == girth[v];
    if (!shortest_for_some) continue;
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    chosen.insert(sorted);
  }
  std::vector<std::vector<double>> cnt(n, std::vector<double>(n, 0.0));
  for (const auto& c : chosen)
    for (int u : c)
      for (int v : c) cnt[u][v] += 1.0;
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (cnt[i][i] == 0.0) continue;
    double s = 1.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && cnt[j][j] > 0.0) s += cnt[i][j] / cnt[j][j];
    out[i] = s;
  }
  return out;
}

// Exact expected final recovered count of synchronous SIR with recovery
// probability 1: every susceptible node with m infected neighbours becomes
// infected with probability 1 - (1 - beta)^m.
inline double sir_expected_recovered(const Graph& g, const std::vector<NodeId>& seeds, double beta) {
  const std::size_t n = g.node_count();
  const auto a = adjacency_bool(g);
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> memo;
  std::function<double(std::uint32_t, std::uint32_t)> expect = [&](std::uint32_t infected,
                                                                   std::uint32_t removed) -> double {
    if (infected == 0) return static_cast<double>(__builtin_popcount(removed));
    const auto key = std::make_pair(infected, removed);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::size_t> at_risk;
    std::vector<double> p;
    for (std::size_t v = 0; v < n; ++v) {
      if ((infected | removed) >> v & 1u) continue;
      int m = 0;
      for (std::size_t u = 0; u < n; ++u) m += (infected >> u & 1u) && a[u][v];
      if (m == 0) continue;
      at_risk.push_back(v);
      p.push_back(1.0 - std::pow(1.0 - beta, m));
    }
    double total = 0.0;
    const std::uint32_t next_removed = removed | infected;
    for (std::uint32_t mask = 0; mask < (1u << at_risk.size()); ++mask) {
      double prob = 1.0;
      std::uint32_t next = 0;
      for (std::size_t k = 0; k < at_risk.size(); ++k) {
        if (mask >> k & 1u) {
          prob *= p[k];
          next |= 1u << at_risk[k];
        } else {
          prob *= 1.0 - p[k];
        }
      }
      if (prob > 0.0) total += prob * expect(next, next_removed);
    }
    memo[key] = total;
    return total;
  };
  std::uint32_t start = 0;
  for (auto s : seeds) start |= 1u << s;
  return expect(start, 0);
}

inline double kendall_tau_a(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  long long c = 0, d = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int sx = (x[i] > x[j]) - (x[i] < x[j]);
      const int sy = (y[i] > y[j]) - (y[i] < y[j]);
      if (sx * sy > 0) ++c;
      if (sx * sy < 0) ++d;
    }
  return 2.0 * static_cast<double>(c - d) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace oracle
