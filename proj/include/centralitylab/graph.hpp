#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace centralitylab {

using NodeId = std::uint32_t;
using Distance = std::uint32_t;

/// Sentinel for "no path" in distance vectors.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Immutable undirected, unweighted simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending, there are no self-loops or duplicate
/// edges, and adjacency is symmetric. Each dense index keeps the original
/// string label it was parsed from.
class Graph {
 public:
  Graph() = default;

  /// Builds a canonical graph from an arbitrary edge list over `labels.size()`
  /// nodes. Self-loops are dropped and duplicate or reversed edges collapsed.
  static Graph from_edges(std::vector<std::string> labels,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  /// Convenience for tests: nodes labelled "0".."n-1".
  static Graph from_edges(std::size_t node_count,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const noexcept;

  const std::string& label(NodeId v) const noexcept { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeId> index_of(std::string_view label) const;

  /// Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  /// 64-bit FNV-1a digest of labels and canonical adjacency.
  std::uint64_t content_hash() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::unordered_map<std::string, NodeId> index_;
};

/// Summary statistics of one network.
struct GraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double mean_degree = 0.0;
  double mean_square_degree = 0.0;
  double density = 0.0;
  double clustering = 0.0;
};

/// Parses a whitespace-delimited edge list. Lines starting with '%' or '#'
/// are comments, blank lines are skipped and any token after the second is
/// ignored. Labels receive dense indices in first-seen order.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

/// Writes one "label label" line per edge. Edges are ordered so that parsing
/// the output reproduces the same node indexing whenever every node of `g`
/// was introduced by an edge (true for anything parse_edge_list returns).
void write_edge_list(const Graph& g, std::ostream& out);

/// Induced subgraph on the largest connected component. Equal-sized
/// components are resolved in favour of the one holding the smallest index.
Graph giant_component(const Graph& g);

bool is_connected(const Graph& g);

/// Hop distances from `source`; unreachable nodes get kUnreachable.
std::vector<Distance> bfs_distances(const Graph& g, NodeId source);

GraphStats graph_stats(const Graph& g);

/// Heterogeneous mean-field SIR threshold <k> / (<k^2> - <k>), clamped to (0, 1].
double epidemic_threshold(const GraphStats& stats);

}  // namespace centralitylab
