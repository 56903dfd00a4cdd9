#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "smallworld/antenna.hpp"
#include "smallworld/topology.hpp"
#include "smallworld/traffic.hpp"

namespace smallworld {

enum class AntennaModel { sector, ula };
enum class Strategy { none, randomized, centralized_topk, distributed_beta };

const char* to_string(AntennaModel model);
const char* to_string(Strategy strategy);
AntennaModel parse_antenna_model(const std::string& name);
Strategy parse_strategy(const std::string& name);

// Which nodes beamform and where they point. Every beamforming node shares
// the same width (sector) or element count (ULA); boresights are per node.
// Nodes without a boresight stay omnidirectional.
struct BeamPlan {
  AntennaModel model = AntennaModel::sector;
  Strategy strategy = Strategy::none;
  double sector_width = two_pi;
  double sector_length = 1.0;
  int ula_elements = 1;
  std::vector<std::optional<double>> boresights;

  int node_count() const { return static_cast<int>(boresights.size()); }
  int beamforming_count() const;
};

// round(fraction * node_count) ids drawn without replacement, sorted.
std::vector<int> select_random(int node_count, double fraction,
                               std::uint64_t seed);

// The round(fraction * N) largest betweenness values; ties at the cutoff go
// to smaller ids. Sorted.
std::vector<int> select_top_wfb(const std::vector<double>& wfb,
                                double fraction);

// Local rule: a node beamforms when its betweenness exceeds beta times its
// neighborhood average. Sorted.
std::vector<int> select_distributed(const std::vector<double>& wfb,
                                    const Topology& topo, double beta);

// One direction per selected node: the recorded relay direction when the
// node has one, a uniform random angle otherwise.
std::vector<double> assign_directions(const std::vector<int>& selected,
                                      const HopDirectionTable& records,
                                      std::uint64_t seed);

BeamPlan make_beam_plan(AntennaModel model, Strategy strategy,
                        double omni_range, const BeamwidthChoice& choice,
                        int node_count, const std::vector<int>& selected,
                        const std::vector<double>& directions);

// Directional transmit, omnidirectional receive: u -> v iff u's antenna
// pattern covers v. A node's own beam changes only its out-edges.
Topology apply_beams(const NodeLayout& layout, const BeamPlan& plan);

// Table "node_id mode boresight param"; param is the width for sector nodes
// and the element count for ULA nodes.
void write_beam_plan(std::ostream& out, const BeamPlan& plan);

}  // namespace smallworld
