#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "smallworld/metrics.hpp"
#include "smallworld/rewire.hpp"

namespace smallworld {

enum class SweepVariable { rewire_fraction, traffic_fraction, beta, region_size };

const char* to_string(SweepVariable v);
SweepVariable parse_sweep_variable(const std::string& name);

// One experiment: a sweep variable, the values to sweep, and how many seeded
// repetitions to run at each value.
struct ExperimentConfig {
  char experiment = 'A';
  int node_count = 300;
  double region_width = 10.0;
  double region_height = 10.0;
  double omni_range = 1.0;
  AntennaModel model = AntennaModel::sector;
  Strategy strategy = Strategy::randomized;
  SweepVariable sweep = SweepVariable::rewire_fraction;
  std::vector<double> sweep_values;
  double traffic_fraction = 1.0;
  double rewire_fraction = 0.1;
  double beta = 2.0;
  int repetitions = 10;
  std::uint64_t base_seed = 1;
  std::string output_path = "results.csv";
  int max_length_multiple = 6;
  int fbc_max_nodes = 100;
  bool compute_rho = false;
};

// Flat "key = value" text, '#' comments. The experiment key picks the
// defaults; every other key overrides one field.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig default_config(char experiment);

// results.csv -> results.summary.csv
std::string summary_path_for(const std::string& output_path);

// Parameters of a single seeded run.
struct RunParams {
  int node_count = 300;
  double region_width = 10.0;
  double region_height = 10.0;
  double omni_range = 1.0;
  AntennaModel model = AntennaModel::sector;
  Strategy strategy = Strategy::randomized;
  double rewire_fraction = 0.1;
  double beta = 2.0;
  double traffic_fraction = 1.0;
  int max_length_multiple = 6;
  std::uint64_t seed = 1;
  bool compute_rho = false;
  int fbc_max_nodes = 100;
};

struct RunOutcome {
  MetricsReport report;
  int layout_retries = 0;
  double rho = 0.0;
};

// Lays out nodes (redrawing until the omnidirectional graph is strongly
// connected), runs traffic, selects and points beams, rewires, measures.
RunOutcome run_single(const RunParams& params);

// Streams one CSV row per (repetition, sweep value) plus a per-value summary
// table. Failed runs become '#' comment lines, never partial rows.
void run_experiment(const ExperimentConfig& config, std::ostream& results,
                    std::ostream& summary);

}  // namespace smallworld
