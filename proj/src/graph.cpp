#include "centralitylab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "centralitylab/error.hpp"

namespace centralitylab {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_bytes(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
}

}  // namespace

Graph Graph::from_edges(std::vector<std::string> labels,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  const std::size_t n = labels.size();
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.targets_.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    ++g.offsets_[u + 1];
    g.targets_.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.labels_ = std::move(labels);
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.index_.emplace(g.labels_[i], static_cast<NodeId>(i)).second) {
      throw InvalidArgument("duplicate node label '" + g.labels_[i] + "'");
    }
  }
  return g;
}

Graph Graph::from_edges(std::size_t node_count,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::string> labels(node_count);
  for (std::size_t i = 0; i < node_count; ++i) labels[i] = std::to_string(i);
  return from_edges(std::move(labels), edges);
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeId> Graph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::content_hash() const noexcept {
  std::uint64_t h = kFnvOffset;
  const std::uint64_t n = node_count();
  fnv_bytes(h, &n, sizeof n);
  for (const auto& l : labels_) {
    fnv_bytes(h, l.data(), l.size());
    const char sep = '\0';
    fnv_bytes(h, &sep, 1);
  }
  fnv_bytes(h, offsets_.data(), offsets_.size() * sizeof(std::size_t));
  fnv_bytes(h, targets_.data(), targets_.size() * sizeof(NodeId));
  return h;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::pair<NodeId, NodeId>> edges;
  auto intern = [&](std::string&& tok) {
    auto [it, fresh] = ids.emplace(std::move(tok), static_cast<NodeId>(labels.size()));
    if (fresh) labels.push_back(it->first);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r\v\f");
    if (first == std::string::npos) continue;
    if (line[first] == '%' || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string a, b;
    if (!(tokens >> a >> b)) {
      throw ParseError(line_no, "expected at least two tokens (source target)");
    }
    const NodeId u = intern(std::move(a));
    const NodeId v = intern(std::move(b));
    edges.emplace_back(u, v);
  }
  if (labels.empty()) throw ParseError(0, "empty graph: no edges found");
  return Graph::from_edges(std::move(labels), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::set<std::pair<NodeId, NodeId>> written;
  auto emit = [&](NodeId first, NodeId second) {
    out << g.label(first) << ' ' << g.label(second) << '\n';
    seen[first] = seen[second] = true;
    written.emplace(std::min(first, second), std::max(first, second));
  };
  // Introduce nodes in index order first so a re-parse assigns the same ids.
  for (NodeId k = 0; k < n; ++k) {
    if (seen[k] || g.degree(k) == 0) continue;
    auto nb = g.neighbors(k);
    if (nb.front() < k) {
      emit(nb.front(), k);
    } else if (k + 1 < n && g.has_edge(k, k + 1)) {
      emit(k, k + 1);
    } else {
      emit(k, nb.front());
    }
  }
  for (auto e : g.edges()) {
    if (!written.count(e)) out << g.label(e.first) << ' ' << g.label(e.second) << '\n';
  }
}

namespace {

// Component id per node, components numbered in order of their smallest node.
std::vector<std::uint32_t> component_ids(const Graph& g, std::uint32_t& count) {
  const std::size_t n = g.node_count();
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> comp(n, kNone);
  std::vector<NodeId> stack;
  count = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != kNone) continue;
    comp[s] = count;
    stack.assign(1, s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (comp[v] == kNone) {
          comp[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::uint32_t count = 0;
  component_ids(g, count);
  return count <= 1;
}

Graph giant_component(const Graph& g) {
  if (g.node_count() == 0) throw InvalidArgument("giant_component: empty graph");
  std::uint32_t count = 0;
  const auto comp = component_ids(g, count);
  if (count == 1) return g;
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  // max_element returns the first maximum, i.e. the component with the smallest node.
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  std::vector<NodeId> remap(g.node_count(), 0);
  std::vector<std::string> labels;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (comp[v] == best) {
      remap[v] = static_cast<NodeId>(labels.size());
      labels.push_back(g.label(v));
    }
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (auto [u, v] : g.edges()) {
    if (comp[u] == best) edges.emplace_back(remap[u], remap[v]);
  }
  return Graph::from_edges(std::move(labels), edges);
}

std::vector<Distance> bfs_distances(const Graph& g, NodeId source) {
  if (source >= g.node_count()) throw InvalidArgument("bfs_distances: source out of range");
  std::vector<Distance> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> frontier{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeId u = frontier[head];
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

GraphStats graph_stats(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw InvalidArgument("graph_stats: need at least 2 nodes");
  GraphStats s;
  s.nodes = n;
  s.edges = g.edge_count();
  const double nd = static_cast<double>(n);
  s.mean_degree = 2.0 * static_cast<double>(s.edges) / nd;
  s.density = 2.0 * static_cast<double>(s.edges) / (nd * (nd - 1.0));

  double sq = 0.0;
  double cc = 0.0;
  std::vector<bool> mark(n, false);
  for (NodeId v = 0; v < n; ++v) {
    const double k = static_cast<double>(g.degree(v));
    sq += k * k;
    if (g.degree(v) < 2) continue;
    for (NodeId u : g.neighbors(v)) mark[u] = true;
    std::size_t links = 0;
    for (NodeId u : g.neighbors(v)) {
      for (NodeId w : g.neighbors(u)) {
        if (w > u && mark[w]) ++links;
      }
    }
    for (NodeId u : g.neighbors(v)) mark[u] = false;
    cc += 2.0 * static_cast<double>(links) / (k * (k - 1.0));
  }
  s.mean_square_degree = sq / nd;
  s.clustering = cc / nd;
  return s;
}

double epidemic_threshold(const GraphStats& stats) {
  const double gap = stats.mean_square_degree - stats.mean_degree;
  if (!(gap > 0.0) || !(stats.mean_degree > 0.0)) {
    throw NumericalError("epidemic threshold undefined: <k^2> <= <k>");
  }
  return std::min(1.0, stats.mean_degree / gap);
}

}  // namespace centralitylab
