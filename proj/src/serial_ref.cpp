#include "smallworld/serial_ref.hpp"

#include <queue>
#include <stdexcept>
#include <vector>

namespace smallworld::serial {

PathStats path_stats(const Topology& topo) {
  const int n = topo.node_count;
  if (n < 2)
    throw std::invalid_argument("path_stats: need at least 2 nodes");

  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  std::int64_t total_dist = 0;
  std::int64_t total_reach = 0;

  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : topo.out_edges[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          reach[s][v] = 1;
          total_dist += dist[v];
          ++total_reach;
          q.push(v);
        }
    }
  }

  std::int64_t one_way = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (reach[u][v] != reach[v][u]) ++one_way;

  PathStats stats;
  stats.reachable_pairs = total_reach;
  stats.apl = total_reach > 0
                  ? static_cast<double>(total_dist) / static_cast<double>(total_reach)
                  : 0.0;
  const double ordered = static_cast<double>(n) * (n - 1);
  stats.reachable_fraction = static_cast<double>(total_reach) / ordered;
  stats.unidirectional_fraction = static_cast<double>(one_way) / (0.5 * ordered);
  return stats;
}

namespace {

// Edmonds-Karp on an adjacency-matrix residual; banned is skipped outright.
int matrix_max_flow(std::vector<std::vector<int>> cap, int s, int t, int banned) {
  const int n = static_cast<int>(cap.size());
  std::vector<int> parent(n);
  int flow = 0;
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && parent[t] == -1) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (v != banned && parent[v] == -1 && cap[u][v] > 0) {
          parent[v] = u;
          q.push(v);
        }
    }
    if (parent[t] == -1) return flow;
    for (int v = t; v != s; v = parent[v]) {
      cap[parent[v]][v] -= 1;
      cap[v][parent[v]] += 1;
    }
    ++flow;
  }
}

}  // namespace

std::vector<double> flow_betweenness_oracle(const Topology& topo) {
  const int n = topo.node_count;
  if (n < 3)
    throw std::invalid_argument("flow_betweenness_oracle: need at least 3 nodes");

  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v : topo.out_edges[u]) cap[u][v] = 1;

  std::vector<std::vector<int>> base(n, std::vector<int>(n, 0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t) base[s][t] = matrix_max_flow(cap, s, t, -1);

  std::vector<double> fbc(n, 0.0);
  for (int v = 0; v < n; ++v) {
    std::int64_t kept = 0, total = 0;
    for (int s = 0; s < n; ++s) {
      if (s == v) continue;
      for (int t = 0; t < n; ++t) {
        if (t == v || t == s) continue;
        total += base[s][t];
        if (base[s][t] > 0) kept += matrix_max_flow(cap, s, t, v);
      }
    }
    if (total > 0)
      fbc[v] = static_cast<double>(total - kept) / static_cast<double>(total);
  }
  return fbc;
}

}  // namespace smallworld::serial
