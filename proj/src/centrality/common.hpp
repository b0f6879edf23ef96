#pragma once

#include <string>

#include "centralitylab/error.hpp"
#include "centralitylab/graph.hpp"

namespace centralitylab::detail {

inline void require_nodes(const Graph& g) {
  if (g.node_count() < 2) throw InvalidArgument("centrality needs at least 2 nodes");
}

inline void require_connected(const Graph& g) {
  require_nodes(g);
  if (!is_connected(g)) throw DisconnectedGraph();
}

inline void require_dense_ok(const Graph& g, std::size_t ceiling, const char* what) {
  if (g.node_count() > ceiling) {
    throw TooLarge(std::string(what) + ": " + std::to_string(g.node_count()) +
                   " nodes exceeds the dense-measure ceiling of " + std::to_string(ceiling));
  }
}

}  // namespace centralitylab::detail
