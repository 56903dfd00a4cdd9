#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "smallworld/layout.hpp"
#include "smallworld/topology.hpp"

namespace smallworld {

struct FlowSpec {
  int source = 0;
  int destination = 0;
};

// One hop of one flow. Overhearers are every node in radio range of the
// transmitter (its out-neighbors), next hop included.
struct TransmissionEvent {
  int transmitter = 0;
  int flow_id = 0;    // index into TransmissionLog::flows
  int hop_index = 0;  // 0 at the flow's source
  int next_hop = 0;
  std::vector<int> overhearers;
};

struct TransmissionLog {
  std::vector<FlowSpec> flows;
  std::vector<TransmissionEvent> events;
};

// fraction * node_count flows; sources drawn without replacement,
// destinations uniform among the other nodes.
std::vector<FlowSpec> generate_flows(int node_count, double fraction,
                                     std::uint64_t seed);

// Hop-count shortest path from source to destination. Among equal-length
// paths, every hop takes the parent with the smallest node id; nullopt when
// the destination is unreachable.
std::optional<std::vector<int>> shortest_path_route(const Topology& topo,
                                                    const FlowSpec& flow);

// Routes every flow and replays it hop by hop. Unroutable flows stay in the
// flow list but contribute no events.
TransmissionLog simulate_flows(const Topology& topo,
                               const std::vector<FlowSpec>& flows);

// Direction a forwarder would point a beam: the bearing toward the node it
// last relayed the highest-hop packet from. Sources record nothing for the
// hops they originate.
struct HopDirection {
  double angle = 0.0;
  int hop_count = 0;
};
using HopDirectionTable = std::vector<std::optional<HopDirection>>;

HopDirectionTable record_hop_directions(const TransmissionLog& log,
                                        const NodeLayout& layout);

void write_transmission_log(std::ostream& out, const TransmissionLog& log);

}  // namespace smallworld
