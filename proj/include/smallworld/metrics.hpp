#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "smallworld/topology.hpp"

namespace smallworld {

// Aggregates of one all-pairs BFS sweep.
struct PathStats {
  double apl = 0.0;                      // mean hops over reachable ordered pairs
  double reachable_fraction = 0.0;       // reachable ordered pairs / N*(N-1)
  double unidirectional_fraction = 0.0;  // unordered pairs reachable one way only
  std::int64_t reachable_pairs = 0;
};

// BFS from every source, OpenMP across sources. Results are identical for
// any thread count: per-source tallies are merged in id order.
PathStats path_stats(const Topology& topo);

// (apl, reachable_fraction); throws undefined_metric_error when no ordered
// pair is reachable.
std::pair<double, double> average_path_length(const Topology& topo);

double unidirectional_fraction(const Topology& topo);

// Directed clustering: among each node's out-neighbors, the fraction of
// ordered pairs that are themselves linked, averaged over nodes with at
// least two out-neighbors.
double clustering_coefficient(const Topology& topo);

struct LogGrowthFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Least-squares fit of value = slope * ln(scale) + intercept over
// (scale, value) samples. Needs three samples spanning distinct scales.
LogGrowthFit log_growth_fit(const std::vector<std::pair<double, double>>& samples);

// One simulation run's worth of reported numbers.
struct MetricsReport {
  double apl = 0.0;
  double apl_ratio = 1.0;
  double cc = 0.0;
  double cc_ratio = 1.0;
  double unidirectional_fraction = 0.0;
  double reachable_pair_fraction = 1.0;
  double diameter = 0.0;     // Euclidean diameter of the layout
  double realized_p = 0.0;   // beamforming nodes / N
};

struct CsvRowContext {
  std::uint64_t seed = 0;
  std::string strategy;
  std::string model;
  int node_count = 0;
  double width = 0.0;
  double height = 0.0;
  double beta = 0.0;
  bool with_rho = false;
  double rho = 0.0;
};

std::string metrics_csv_header(bool with_rho);
std::string metrics_csv_row(const CsvRowContext& ctx, const MetricsReport& report);

}  // namespace smallworld
