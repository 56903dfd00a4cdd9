#pragma once

#include <vector>

#include "smallworld/layout.hpp"

namespace smallworld {

// Directed graph over node ids 0..N-1. Neighbor lists are kept sorted
// ascending; an edge u->v means v hears u's transmissions.
struct Topology {
  int node_count = 0;
  std::vector<std::vector<int>> out_edges;

  bool has_edge(int u, int v) const;
};

// Omnidirectional connectivity: u->v iff distance(u, v) <= omni_range.
// Symmetric by construction.
Topology build_omni_graph(const NodeLayout& layout);

bool is_symmetric(const Topology& topo);
bool strongly_connected(const Topology& topo);
std::vector<std::vector<int>> reverse_adjacency(const Topology& topo);

}  // namespace smallworld
