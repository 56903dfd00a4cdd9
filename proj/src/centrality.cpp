#include "smallworld/centrality.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "smallworld/errors.hpp"

namespace smallworld {

void CentralityState::record_transmit(const FlowSpec& flow) {
  auto key = std::pair{flow.source, flow.destination};
  if (transmitted_.insert(key).second) ++forward_count_;
  if (seen_.insert(key).second) ++overheard_count_;
  recompute();
}

void CentralityState::record_overhear(int transmitter, const FlowSpec& flow,
                                      const NeighborInfo& piggyback) {
  neighbor_table_[transmitter] = piggyback;
  if (seen_.insert(std::pair{flow.source, flow.destination}).second)
    ++overheard_count_;
  recompute();
}

void CentralityState::recompute() {
  if (overheard_count_ == 0) {
    wfb_ = 0.0;
    return;
  }
  // the forwarding-heaviest neighbor; map order resolves ties to smaller ids
  const NeighborInfo* top = nullptr;
  for (const auto& [id, info] : neighbor_table_)
    if (!top || info.forward_count > top->forward_count) top = &info;
  double extra = top ? additional_flows(top->forward_count, top->wfb) : 0.0;
  wfb_ = static_cast<double>(forward_count_) /
         (static_cast<double>(overheard_count_) + extra);
}

double additional_flows(std::int64_t neighbor_forward_count,
                        double neighbor_wfb) {
  if (neighbor_forward_count <= 0 || !(neighbor_wfb > 0.0)) return 0.0;
  double g = static_cast<double>(neighbor_forward_count);
  return g / neighbor_wfb - g;
}

double naive_betweenness(std::int64_t own_forward_count,
                         const std::vector<std::int64_t>& neighbor_forward_counts) {
  if (own_forward_count < 0)
    throw std::invalid_argument("naive_betweenness: negative forward count");
  std::int64_t total = own_forward_count;
  for (std::int64_t g : neighbor_forward_counts) {
    if (g < 0)
      throw std::invalid_argument("naive_betweenness: negative forward count");
    total += g;
  }
  if (total == 0) return 0.0;
  return static_cast<double>(own_forward_count) / static_cast<double>(total);
}

std::vector<double> run_wfb(const Topology& topo, const TransmissionLog& log) {
  return run_wfb(topo, log, WfbObserver{});
}

std::vector<double> run_wfb(const Topology& topo, const TransmissionLog& log,
                            const WfbObserver& observer) {
  const int n = topo.node_count;
  std::vector<CentralityState> states(n);
  std::vector<int> expected_hop(log.flows.size(), 0);

  for (const auto& ev : log.events) {
    if (ev.flow_id < 0 || ev.flow_id >= static_cast<int>(log.flows.size()))
      throw std::invalid_argument("run_wfb: event references unknown flow");
    if (ev.transmitter < 0 || ev.transmitter >= n)
      throw std::invalid_argument("run_wfb: event references unknown node");
    if (ev.hop_index != expected_hop[ev.flow_id])
      throw log_corruption_error("run_wfb: hop indices of flow " +
                                 std::to_string(ev.flow_id) +
                                 " are out of order");
    expected_hop[ev.flow_id] = ev.hop_index + 1;

    const FlowSpec& flow = log.flows[ev.flow_id];
    CentralityState& tx = states[ev.transmitter];
    tx.record_transmit(flow);
    if (observer) observer(ev.transmitter, tx);

    // overhearers read the transmitter's state as updated by this very packet
    NeighborInfo piggyback{tx.wfb(), tx.forward_count()};
    for (int v : ev.overhearers) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("run_wfb: event references unknown node");
      states[v].record_overhear(ev.transmitter, flow, piggyback);
      if (observer) observer(v, states[v]);
    }
  }

  std::vector<double> wfb(n);
  for (int v = 0; v < n; ++v) wfb[v] = states[v].wfb();
  return wfb;
}

namespace {

// Unit-capacity arc-pair network: arcs 2i and 2i+1 are a directed edge and
// its residual twin. arc_list groups arc ids by tail node.
struct FlowNetwork {
  int node_count = 0;
  std::vector<int> arc_to;
  std::vector<int> init_cap;
  std::vector<int> arc_start;
  std::vector<int> arc_list;

  explicit FlowNetwork(const Topology& topo) {
    node_count = topo.node_count;
    std::vector<int> deg(node_count, 0);
    for (int u = 0; u < node_count; ++u)
      for (int v : topo.out_edges[u]) {
        arc_to.push_back(v);
        init_cap.push_back(1);
        arc_to.push_back(u);
        init_cap.push_back(0);
        ++deg[u];
        ++deg[v];
      }
    arc_start.assign(node_count + 1, 0);
    for (int u = 0; u < node_count; ++u)
      arc_start[u + 1] = arc_start[u] + deg[u];
    arc_list.resize(arc_to.size());
    std::vector<int> cursor(arc_start.begin(), arc_start.end() - 1);
    int arc = 0;
    for (int u = 0; u < node_count; ++u)
      for (int v : topo.out_edges[u]) {
        arc_list[cursor[u]++] = arc;
        arc_list[cursor[v]++] = arc + 1;
        arc += 2;
      }
  }

  int arc_count() const { return static_cast<int>(arc_to.size()); }
  int tail(int a) const { return arc_to[a ^ 1]; }
};

struct PairScratch {
  std::vector<int> cap;
  std::vector<int> clean_cap;
  std::vector<int> parent_arc;
  std::vector<int> stamp;
  int generation = 0;
  std::vector<int> queue;
  std::vector<std::uint8_t> flow_left;
  std::vector<int> walk_pos;
  std::vector<int> walk_nodes;
  std::vector<int> walk_arcs;
  std::vector<std::vector<int>> path_arcs;
  std::vector<std::vector<int>> paths_via;
  std::vector<int> via_touched;

  explicit PairScratch(const FlowNetwork& net)
      : cap(net.arc_count()),
        clean_cap(net.arc_count()),
        parent_arc(net.node_count, -1),
        stamp(net.node_count, 0),
        flow_left(net.arc_count() / 2),
        walk_pos(net.node_count, -1),
        paths_via(net.node_count) {}
};

// Shortest augmenting paths over `cap` until none remains; every push moves
// one unit. Arcs into `skip` are off limits.
int augment_to_max(const FlowNetwork& net, PairScratch& sc,
                   std::vector<int>& cap, int s, int t, int skip) {
  int pushed = 0;
  for (;;) {
    ++sc.generation;
    const int gen = sc.generation;
    sc.queue.clear();
    sc.queue.push_back(s);
    sc.stamp[s] = gen;
    bool found = false;
    for (std::size_t head = 0; head < sc.queue.size() && !found; ++head) {
      int u = sc.queue[head];
      for (int idx = net.arc_start[u]; idx < net.arc_start[u + 1]; ++idx) {
        int a = net.arc_list[idx];
        if (cap[a] <= 0) continue;
        int v = net.arc_to[a];
        if (v == skip || sc.stamp[v] == gen) continue;
        sc.stamp[v] = gen;
        sc.parent_arc[v] = a;
        if (v == t) {
          found = true;
          break;
        }
        sc.queue.push_back(v);
      }
    }
    if (!found) return pushed;
    for (int v = t; v != s;) {
      int a = sc.parent_arc[v];
      --cap[a];
      ++cap[a ^ 1];
      v = net.tail(a);
    }
    ++pushed;
  }
}

int first_flow_arc(const FlowNetwork& net, const PairScratch& sc, int x) {
  for (int idx = net.arc_start[x]; idx < net.arc_start[x + 1]; ++idx) {
    int a = net.arc_list[idx];
    if ((a & 1) == 0 && sc.flow_left[a >> 1]) return a;
  }
  return -1;
}

// Max-flow for (s, t), then one removal per node the flow decomposes
// through: instead of recomputing each maxflow(s, t, G - v) from zero, the
// surviving flow (value F - f_v) warm-starts the augmentation.
int process_pair(const FlowNetwork& net, PairScratch& sc, int s, int t,
                 std::vector<std::int64_t>& through) {
  sc.cap = net.init_cap;
  const int flow = augment_to_max(net, sc, sc.cap, s, t, -1);
  if (flow == 0) return 0;

  const int pair_count = net.arc_count() / 2;
  for (int e = 0; e < pair_count; ++e)
    sc.flow_left[e] = sc.cap[2 * e] == 0 ? 1 : 0;
  sc.clean_cap = sc.cap;

  // Decompose into unit paths. Cycles met along a walk are cut out of the
  // walk and their flow erased from clean_cap; the value is untouched.
  sc.path_arcs.clear();
  for (int walk = 0; walk < flow; ++walk) {
    sc.walk_nodes.assign(1, s);
    sc.walk_arcs.clear();
    sc.walk_pos[s] = 0;
    int x = s;
    while (x != t) {
      int a = first_flow_arc(net, sc, x);
      assert(a >= 0);  // flow conservation leaves an exit until t is reached
      sc.flow_left[a >> 1] = 0;
      int y = net.arc_to[a];
      if (sc.walk_pos[y] >= 0) {
        sc.clean_cap[a] = 1;
        sc.clean_cap[a ^ 1] = 0;
        const int keep = sc.walk_pos[y] + 1;
        while (static_cast<int>(sc.walk_nodes.size()) > keep) {
          int pa = sc.walk_arcs.back();
          sc.walk_arcs.pop_back();
          sc.clean_cap[pa] = 1;
          sc.clean_cap[pa ^ 1] = 0;
          sc.walk_pos[sc.walk_nodes.back()] = -1;
          sc.walk_nodes.pop_back();
        }
      } else {
        sc.walk_pos[y] = static_cast<int>(sc.walk_nodes.size());
        sc.walk_nodes.push_back(y);
        sc.walk_arcs.push_back(a);
      }
      x = y;
    }
    const int path_id = static_cast<int>(sc.path_arcs.size());
    for (std::size_t i = 1; i + 1 < sc.walk_nodes.size(); ++i) {
      int v = sc.walk_nodes[i];
      if (sc.paths_via[v].empty()) sc.via_touched.push_back(v);
      sc.paths_via[v].push_back(path_id);
    }
    sc.path_arcs.push_back(sc.walk_arcs);
    for (int v : sc.walk_nodes) sc.walk_pos[v] = -1;
  }

  // leftover circulation never reaches t; erase it too
  for (int e = 0; e < pair_count; ++e) {
    if (!sc.flow_left[e]) continue;
    int a = 2 * e;
    const int start = net.tail(a);
    for (;;) {
      sc.flow_left[a >> 1] = 0;
      sc.clean_cap[a] = 1;
      sc.clean_cap[a ^ 1] = 0;
      int x = net.arc_to[a];
      if (x == start) break;
      a = first_flow_arc(net, sc, x);
      assert(a >= 0);
    }
  }

  for (int v : sc.via_touched) {
    const int via = static_cast<int>(sc.paths_via[v].size());
    sc.cap = sc.clean_cap;
    for (int pid : sc.paths_via[v])
      for (int a : sc.path_arcs[pid]) {
        sc.cap[a] = 1;
        sc.cap[a ^ 1] = 0;
      }
    int regained = augment_to_max(net, sc, sc.cap, s, t, v);
    through[v] += via - regained;
    sc.paths_via[v].clear();
  }
  sc.via_touched.clear();
  return flow;
}

}  // namespace

std::vector<double> flow_betweenness_oracle(const Topology& topo) {
  const int n = topo.node_count;
  if (n < 3)
    throw std::invalid_argument("flow_betweenness_oracle: need at least 3 nodes");

  const FlowNetwork net(topo);
  std::vector<std::int64_t> through(n, 0);
  std::vector<std::int64_t> endpoint_mass(n, 0);
  std::int64_t total_mass = 0;

#pragma omp parallel
  {
    PairScratch sc(net);
    std::vector<std::int64_t> local_through(n, 0);
    std::vector<std::int64_t> local_endpoint(n, 0);
    std::int64_t local_total = 0;

#pragma omp for schedule(dynamic, 16)
    for (int p = 0; p < n * n; ++p) {
      const int s = p / n;
      const int t = p % n;
      if (s == t) continue;
      int flow = process_pair(net, sc, s, t, local_through);
      local_total += flow;
      local_endpoint[s] += flow;
      local_endpoint[t] += flow;
    }

    // integer tallies merge exactly regardless of thread order
#pragma omp critical
    {
      total_mass += local_total;
      for (int v = 0; v < n; ++v) {
        through[v] += local_through[v];
        endpoint_mass[v] += local_endpoint[v];
      }
    }
  }

  std::vector<double> fbc(n, 0.0);
  for (int v = 0; v < n; ++v) {
    const std::int64_t denom = total_mass - endpoint_mass[v];
    if (denom > 0)
      fbc[v] = static_cast<double>(through[v]) / static_cast<double>(denom);
  }
  return fbc;
}

std::vector<double> fractional_ranks(const std::vector<double>& values) {
  if (values.empty())
    throw std::invalid_argument("fractional_ranks: empty input");
  const int n = static_cast<int>(values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return a < b;
  });
  std::vector<double> ranks(n);
  int i = 0;
  while (i < n) {
    int j = i;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // equal values share the average of positions i+1 .. j (1-based)
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (int p = i; p < j; ++p) ranks[order[p]] = rank;
    i = j;
  }
  return ranks;
}

namespace {

bool has_duplicates(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

}  // namespace

double spearman_rho(const std::vector<double>& ranks_a,
                    const std::vector<double>& ranks_b) {
  if (ranks_a.size() != ranks_b.size())
    throw std::invalid_argument("spearman_rho: rank vectors differ in length");
  const int n = static_cast<int>(ranks_a.size());
  if (n < 2)
    throw std::invalid_argument("spearman_rho: need at least 2 entries");

  if (!has_duplicates(ranks_a) && !has_duplicates(ranks_b)) {
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      double d = ranks_a[i] - ranks_b[i];
      sum_sq += d * d;
    }
    const double nn = static_cast<double>(n);
    return 1.0 - 6.0 * sum_sq / (nn * (nn * nn - 1.0));
  }

  // ties: product-moment correlation of the rank vectors
  double mean_a = 0.0, mean_b = 0.0;
  for (int i = 0; i < n; ++i) {
    mean_a += ranks_a[i];
    mean_b += ranks_b[i];
  }
  mean_a /= n;
  mean_b /= n;
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (int i = 0; i < n; ++i) {
    double da = ranks_a[i] - mean_a;
    double db = ranks_b[i] - mean_b;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  if (saa <= 0.0 || sbb <= 0.0)
    throw undefined_metric_error("spearman_rho: a rank vector is constant");
  return sab / std::sqrt(saa * sbb);
}

void write_centrality_table(std::ostream& out, const std::vector<double>& wfb,
                            const std::vector<double>& fbc) {
  if (wfb.size() != fbc.size())
    throw std::invalid_argument("write_centrality_table: size mismatch");
  const auto rank_wfb = fractional_ranks(wfb);
  const auto rank_fbc = fractional_ranks(fbc);
  out << "node_id wfb fbc rank_wfb rank_fbc\n";
  char buf[160];
  for (std::size_t v = 0; v < wfb.size(); ++v) {
    std::snprintf(buf, sizeof buf, "%zu %.6f %.6f %.6f %.6f\n", v, wfb[v],
                  fbc[v], rank_wfb[v], rank_fbc[v]);
    out << buf;
  }
}

}  // namespace smallworld
