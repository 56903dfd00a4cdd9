#include "smallworld/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "smallworld/errors.hpp"
#include "smallworld/rng.hpp"

namespace smallworld {

std::vector<FlowSpec> generate_flows(int node_count, double fraction,
                                     std::uint64_t seed) {
  if (node_count < 2)
    throw std::invalid_argument("generate_flows: need at least 2 nodes");
  if (!(fraction >= 0.0) || fraction > 1.0)
    throw std::invalid_argument("generate_flows: fraction must lie in [0, 1]");

  const int flow_count = static_cast<int>(std::llround(fraction * node_count));
  Rng rng(seed);
  std::vector<int> sources = rng.sample_without_replacement(node_count, flow_count);

  std::vector<FlowSpec> flows;
  flows.reserve(flow_count);
  for (int src : sources) {
    // uniform over the other nodes: draw from N-1 slots, skip the source
    int dst = static_cast<int>(rng.below(static_cast<std::uint64_t>(node_count - 1)));
    if (dst >= src) ++dst;
    flows.push_back({src, dst});
  }
  return flows;
}

std::optional<std::vector<int>> shortest_path_route(const Topology& topo,
                                                    const FlowSpec& flow) {
  const int n = topo.node_count;
  if (flow.source < 0 || flow.source >= n || flow.destination < 0 ||
      flow.destination >= n)
    throw std::invalid_argument("shortest_path_route: node id out of range");
  if (flow.source == flow.destination)
    throw std::invalid_argument("shortest_path_route: source equals destination");

  // Level-synchronized BFS with each level kept in ascending id order, so a
  // node discovered at depth d gets the smallest-id parent at depth d-1.
  std::vector<int> parent(n, -1);
  std::vector<char> visited(n, 0);
  std::vector<int> level{flow.source}, next;
  visited[flow.source] = 1;
  while (!level.empty() && !visited[flow.destination]) {
    next.clear();
    for (int u : level)
      for (int v : topo.out_edges[u])
        if (!visited[v]) {
          visited[v] = 1;
          parent[v] = u;
          next.push_back(v);
        }
    std::sort(next.begin(), next.end());
    level.swap(next);
  }
  if (!visited[flow.destination]) return std::nullopt;

  std::vector<int> path;
  for (int x = flow.destination; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

TransmissionLog simulate_flows(const Topology& topo,
                               const std::vector<FlowSpec>& flows) {
  TransmissionLog log;
  log.flows = flows;
  for (std::size_t fid = 0; fid < flows.size(); ++fid) {
    auto path = shortest_path_route(topo, flows[fid]);
    if (!path) continue;
    for (std::size_t i = 0; i + 1 < path->size(); ++i) {
      TransmissionEvent ev;
      ev.transmitter = (*path)[i];
      ev.flow_id = static_cast<int>(fid);
      ev.hop_index = static_cast<int>(i);
      ev.next_hop = (*path)[i + 1];
      ev.overhearers = topo.out_edges[ev.transmitter];
      log.events.push_back(std::move(ev));
    }
  }
  return log;
}

HopDirectionTable record_hop_directions(const TransmissionLog& log,
                                        const NodeLayout& layout) {
  const int n = layout.node_count();
  HopDirectionTable table(n);
  std::vector<int> last_transmitter(log.flows.size(), -1);
  for (const auto& ev : log.events) {
    if (ev.flow_id < 0 || ev.flow_id >= static_cast<int>(log.flows.size()))
      throw std::invalid_argument("record_hop_directions: flow id out of range");
    if (ev.transmitter < 0 || ev.transmitter >= n)
      throw std::invalid_argument("record_hop_directions: transmitter out of range");
    if (ev.hop_index > 0) {
      int prev = last_transmitter[ev.flow_id];
      if (prev < 0)
        throw log_corruption_error(
            "record_hop_directions: relay event with no preceding hop");
      double angle = bearing(layout.positions[ev.transmitter],
                             layout.positions[prev]);
      auto& slot = table[ev.transmitter];
      // deeper hop wins; the first sighting wins ties
      if (!slot || ev.hop_index > slot->hop_count)
        slot = HopDirection{angle, ev.hop_index};
    }
    last_transmitter[ev.flow_id] = ev.transmitter;
  }
  return table;
}

void write_transmission_log(std::ostream& out, const TransmissionLog& log) {
  out << "flow_id hop_index transmitter next_hop\n";
  for (const auto& ev : log.events)
    out << ev.flow_id << ' ' << ev.hop_index << ' ' << ev.transmitter << ' '
        << ev.next_hop << '\n';
}

}  // namespace smallworld
