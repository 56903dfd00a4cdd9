#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "smallworld/topology.hpp"
#include "smallworld/traffic.hpp"

namespace smallworld {

// Last (betweenness, forward count) pair a neighbor piggybacked on a packet.
struct NeighborInfo {
  double wfb = 0.0;
  std::int64_t forward_count = 0;
};

// Per-node traffic bookkeeping behind wireless flow betweenness. Flows are
// deduplicated by (source, destination): relaying or overhearing the same
// flow twice counts once.
class CentralityState {
 public:
  void record_transmit(const FlowSpec& flow);
  void record_overhear(int transmitter, const FlowSpec& flow,
                       const NeighborInfo& piggyback);

  std::int64_t forward_count() const { return forward_count_; }
  std::int64_t overheard_count() const { return overheard_count_; }
  double wfb() const { return wfb_; }
  const std::map<int, NeighborInfo>& neighbor_table() const {
    return neighbor_table_;
  }

 private:
  void recompute();

  std::set<std::pair<int, int>> transmitted_;
  std::set<std::pair<int, int>> seen_;
  std::map<int, NeighborInfo> neighbor_table_;
  std::int64_t forward_count_ = 0;
  std::int64_t overheard_count_ = 0;
  double wfb_ = 0.0;
};

// Flows a neighbor saw but this node did not: g_u / w_u - g_u when both are
// positive, zero otherwise.
double additional_flows(std::int64_t neighbor_forward_count,
                        double neighbor_wfb);

// First-cut estimate: own forwards over the forwards of the whole closed
// neighborhood.
double naive_betweenness(std::int64_t own_forward_count,
                         const std::vector<std::int64_t>& neighbor_forward_counts);

// Replays the log through per-node states and returns each node's final
// betweenness. The observer, when given, fires after every state update.
using WfbObserver = std::function<void(int node, const CentralityState& state)>;

std::vector<double> run_wfb(const Topology& topo, const TransmissionLog& log);
std::vector<double> run_wfb(const Topology& topo, const TransmissionLog& log,
                            const WfbObserver& observer);

// Exact flow betweenness, the validation yardstick: for each node, the max-flow
// units between other pairs that vanish when the node is removed, normalized
// by the total max-flow between those pairs. Unit capacity per directed edge.
// All-pairs max-flow, so meant for inputs of no more than a few hundred nodes.
std::vector<double> flow_betweenness_oracle(const Topology& topo);

// Rank 1 for the largest value; ties share the average of their positions.
std::vector<double> fractional_ranks(const std::vector<double>& values);

// Rank correlation of two rank vectors. Uses the exact closed form when both
// are tie-free, the product-moment form otherwise.
double spearman_rho(const std::vector<double>& ranks_a,
                    const std::vector<double>& ranks_b);

// Table "node_id wfb fbc rank_wfb rank_fbc", six-decimal values.
void write_centrality_table(std::ostream& out, const std::vector<double>& wfb,
                            const std::vector<double>& fbc);

}  // namespace smallworld
