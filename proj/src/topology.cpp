#include "smallworld/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace smallworld {

bool Topology::has_edge(int u, int v) const {
  if (u < 0 || u >= node_count || v < 0 || v >= node_count) return false;
  const auto& out = out_edges[u];
  return std::binary_search(out.begin(), out.end(), v);
}

Topology build_omni_graph(const NodeLayout& layout) {
  const int n = layout.node_count();
  Topology topo;
  topo.node_count = n;
  topo.out_edges.resize(n);
  const double r = layout.omni_range;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (v != u && distance(layout.positions[u], layout.positions[v]) <= r)
        topo.out_edges[u].push_back(v);
  return topo;
}

bool is_symmetric(const Topology& topo) {
  for (int u = 0; u < topo.node_count; ++u)
    for (int v : topo.out_edges[u])
      if (!topo.has_edge(v, u)) return false;
  return true;
}

std::vector<std::vector<int>> reverse_adjacency(const Topology& topo) {
  std::vector<std::vector<int>> rev(topo.node_count);
  for (int u = 0; u < topo.node_count; ++u)
    for (int v : topo.out_edges[u]) rev[v].push_back(u);
  return rev;
}

namespace {

int bfs_reach_count(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> queue{start};
  seen[start] = 1;
  int count = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int v : adj[queue[head]])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        queue.push_back(v);
      }
  }
  return count;
}

}  // namespace

bool strongly_connected(const Topology& topo) {
  if (topo.node_count == 0)
    throw std::invalid_argument("strongly_connected: empty topology");
  if (topo.node_count == 1) return true;
  if (bfs_reach_count(topo.out_edges, 0) != topo.node_count) return false;
  return bfs_reach_count(reverse_adjacency(topo), 0) == topo.node_count;
}

}  // namespace smallworld
