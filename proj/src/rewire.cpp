#include "smallworld/rewire.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "smallworld/rng.hpp"

namespace smallworld {

const char* to_string(AntennaModel model) {
  return model == AntennaModel::sector ? "sector" : "ula";
}

const char* to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::none: return "none";
    case Strategy::randomized: return "randomized";
    case Strategy::centralized_topk: return "topk";
    case Strategy::distributed_beta: return "distributed";
  }
  return "?";
}

AntennaModel parse_antenna_model(const std::string& name) {
  if (name == "sector") return AntennaModel::sector;
  if (name == "ula") return AntennaModel::ula;
  throw std::invalid_argument("unknown antenna model '" + name + "'");
}

Strategy parse_strategy(const std::string& name) {
  if (name == "none") return Strategy::none;
  if (name == "randomized") return Strategy::randomized;
  if (name == "topk") return Strategy::centralized_topk;
  if (name == "distributed") return Strategy::distributed_beta;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

int BeamPlan::beamforming_count() const {
  int count = 0;
  for (const auto& b : boresights)
    if (b) ++count;
  return count;
}

std::vector<int> select_random(int node_count, double fraction,
                               std::uint64_t seed) {
  if (node_count < 0)
    throw std::invalid_argument("select_random: negative node count");
  if (!(fraction >= 0.0) || fraction > 1.0)
    throw std::invalid_argument("select_random: fraction must lie in [0, 1]");
  const int k = static_cast<int>(std::llround(fraction * node_count));
  Rng rng(seed);
  std::vector<int> picked = rng.sample_without_replacement(node_count, k);
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<int> select_top_wfb(const std::vector<double>& wfb,
                                double fraction) {
  if (wfb.empty())
    throw std::invalid_argument("select_top_wfb: empty betweenness vector");
  if (!(fraction >= 0.0) || fraction > 1.0)
    throw std::invalid_argument("select_top_wfb: fraction must lie in [0, 1]");
  const int n = static_cast<int>(wfb.size());
  const int k = static_cast<int>(std::llround(fraction * n));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (wfb[a] != wfb[b]) return wfb[a] > wfb[b];
    return a < b;
  });
  std::vector<int> picked(order.begin(), order.begin() + k);
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<int> select_distributed(const std::vector<double>& wfb,
                                    const Topology& topo, double beta) {
  if (static_cast<int>(wfb.size()) != topo.node_count)
    throw std::invalid_argument("select_distributed: betweenness vector does not match topology");
  if (!(beta > 0.0))
    throw std::invalid_argument("select_distributed: beta must be positive");
  std::vector<int> picked;
  for (int v = 0; v < topo.node_count; ++v) {
    const auto& nbrs = topo.out_edges[v];
    if (nbrs.empty()) continue;
    double mean = 0.0;
    for (int u : nbrs) mean += wfb[u];
    mean /= static_cast<double>(nbrs.size());
    if (mean > 0.0 && wfb[v] / mean > beta) picked.push_back(v);
  }
  return picked;
}

std::vector<double> assign_directions(const std::vector<int>& selected,
                                      const HopDirectionTable& records,
                                      std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> directions(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const int v = selected[i];
    if (v < 0)
      throw std::invalid_argument("assign_directions: negative node id");
    if (v < static_cast<int>(records.size()) && records[v])
      directions[i] = records[v]->angle;
    else
      directions[i] = rng.uniform(0.0, two_pi);
  }
  return directions;
}

BeamPlan make_beam_plan(AntennaModel model, Strategy strategy,
                        double omni_range, const BeamwidthChoice& choice,
                        int node_count, const std::vector<int>& selected,
                        const std::vector<double>& directions) {
  if (node_count < 0)
    throw std::invalid_argument("make_beam_plan: negative node count");
  if (selected.size() != directions.size())
    throw std::invalid_argument("make_beam_plan: one direction per selected node");
  BeamPlan plan;
  plan.model = model;
  plan.strategy = strategy;
  plan.sector_width = choice.width;
  plan.sector_length = sector_beam_length(choice.width, omni_range);
  plan.ula_elements = elements_for_beamwidth(choice, omni_range);
  plan.boresights.assign(node_count, std::nullopt);
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const int v = selected[i];
    if (v < 0 || v >= node_count)
      throw std::invalid_argument("make_beam_plan: selected id out of range");
    plan.boresights[v] = directions[i];
  }
  return plan;
}

Topology apply_beams(const NodeLayout& layout, const BeamPlan& plan) {
  const int n = layout.node_count();
  if (plan.node_count() != n)
    throw std::invalid_argument("apply_beams: plan does not cover the layout");

  Topology topo;
  topo.node_count = n;
  topo.out_edges.resize(n);
  const double r = layout.omni_range;
  for (int u = 0; u < n; ++u) {
    const Point& pu = layout.positions[u];
    auto& out = topo.out_edges[u];
    if (!plan.boresights[u]) {
      for (int v = 0; v < n; ++v)
        if (v != u && distance(pu, layout.positions[v]) <= r)
          out.push_back(v);
    } else if (plan.model == AntennaModel::sector) {
      SectorBeam beam{*plan.boresights[u], plan.sector_width, plan.sector_length};
      for (int v = 0; v < n; ++v)
        if (v != u && sector_covers(pu, beam, layout.positions[v]))
          out.push_back(v);
    } else {
      UlaBeam beam = make_ula_beam(*plan.boresights[u], plan.ula_elements, r);
      for (int v = 0; v < n; ++v)
        if (v != u && ula_covers(pu, beam, layout.positions[v], r))
          out.push_back(v);
    }
  }
  return topo;
}

void write_beam_plan(std::ostream& out, const BeamPlan& plan) {
  out << "node_id mode boresight param\n";
  char buf[128];
  for (int v = 0; v < plan.node_count(); ++v) {
    if (!plan.boresights[v]) {
      std::snprintf(buf, sizeof buf, "%d omni 0.000000 0\n", v);
    } else if (plan.model == AntennaModel::sector) {
      std::snprintf(buf, sizeof buf, "%d sector %.6f %.6f\n", v,
                    *plan.boresights[v], plan.sector_width);
    } else {
      std::snprintf(buf, sizeof buf, "%d ula %.6f %d\n", v,
                    *plan.boresights[v], plan.ula_elements);
    }
    out << buf;
  }
}

}  // namespace smallworld
