#include "smallworld/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "smallworld/centrality.hpp"
#include "smallworld/errors.hpp"
#include "smallworld/rng.hpp"
#include "smallworld/traffic.hpp"

namespace smallworld {

namespace {

// distinct streams per purpose, all derived from the one run seed
constexpr std::uint64_t kLayoutSalt = 0x6c61796f75740001ULL;
constexpr std::uint64_t kTrafficSalt = 0x7472616666690002ULL;
constexpr std::uint64_t kSelectionSalt = 0x73656c6563740003ULL;
constexpr std::uint64_t kDirectionSalt = 0x6469726563740004ULL;

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double d;
  try {
    d = std::stod(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for '" + key + "'");
  }
  if (used != value.size())
    throw std::invalid_argument("config: bad number for '" + key + "'");
  return d;
}

long long parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long i;
  try {
    i = std::stoll(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer for '" + key + "'");
  }
  if (used != value.size())
    throw std::invalid_argument("config: bad integer for '" + key + "'");
  return i;
}

std::vector<double> parse_value_list(const std::string& key,
                                     const std::string& value) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t comma = value.find(',', start);
    if (comma == std::string::npos) comma = value.size();
    std::string item = trim(value.substr(start, comma - start));
    if (item.empty())
      throw std::invalid_argument("config: empty entry in '" + key + "'");
    values.push_back(parse_double(key, item));
    start = comma + 1;
  }
  return values;
}

}  // namespace

const char* to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::rewire_fraction: return "p";
    case SweepVariable::traffic_fraction: return "f";
    case SweepVariable::beta: return "beta";
    case SweepVariable::region_size: return "region";
  }
  return "?";
}

SweepVariable parse_sweep_variable(const std::string& name) {
  if (name == "p") return SweepVariable::rewire_fraction;
  if (name == "f") return SweepVariable::traffic_fraction;
  if (name == "beta") return SweepVariable::beta;
  if (name == "region") return SweepVariable::region_size;
  throw std::invalid_argument("unknown sweep variable '" + name + "'");
}

ExperimentConfig default_config(char experiment) {
  ExperimentConfig cfg;
  cfg.experiment = static_cast<char>(
      std::toupper(static_cast<unsigned char>(experiment)));
  switch (cfg.experiment) {
    case 'A':
      cfg.strategy = Strategy::randomized;
      cfg.sweep = SweepVariable::rewire_fraction;
      cfg.sweep_values = {0.0, 0.05, 0.1, 0.2, 0.4};
      break;
    case 'B':
      cfg.strategy = Strategy::centralized_topk;
      cfg.sweep = SweepVariable::rewire_fraction;
      cfg.sweep_values = {0.0, 0.05, 0.1, 0.2, 0.4};
      break;
    case 'C':
      cfg.strategy = Strategy::randomized;
      cfg.rewire_fraction = 1.0;
      cfg.sweep = SweepVariable::region_size;
      cfg.sweep_values = {8.0, 10.0, 12.0, 14.0};
      break;
    case 'D':
      // rank validation runs on the pre-rewiring topology at oracle scale
      cfg.strategy = Strategy::none;
      cfg.node_count = 100;
      cfg.region_width = cfg.region_height = std::sqrt(100.0 / 3.0);
      cfg.traffic_fraction = 0.3;
      cfg.sweep = SweepVariable::traffic_fraction;
      cfg.sweep_values = {0.1, 0.2, 0.3, 0.5, 1.0};
      cfg.compute_rho = true;
      break;
    case 'E':
      cfg.strategy = Strategy::centralized_topk;
      cfg.sweep = SweepVariable::region_size;
      cfg.sweep_values = {8.0, 10.0, 12.0, 14.0};
      break;
    case 'F':
      cfg.strategy = Strategy::distributed_beta;
      cfg.sweep = SweepVariable::beta;
      cfg.sweep_values = {1.0, 1.5, 2.0, 3.0, 4.0};
      break;
    case 'G':
      cfg.strategy = Strategy::distributed_beta;
      cfg.model = AntennaModel::ula;
      cfg.sweep = SweepVariable::region_size;
      cfg.sweep_values = {8.0, 10.0, 12.0, 14.0};
      break;
    default:
      throw std::invalid_argument("experiment must be a letter A..G");
  }
  return cfg;
}

ExperimentConfig parse_config(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected 'key = value', got '" +
                                  line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("config: empty key or value in '" + line + "'");
    for (const auto& [k, v] : entries)
      if (k == key)
        throw std::invalid_argument("config: duplicate key '" + key + "'");
    entries.emplace_back(key, value);
  }

  const std::string* experiment = nullptr;
  for (const auto& [k, v] : entries)
    if (k == "experiment") experiment = &v;
  if (!experiment)
    throw std::invalid_argument("config: missing 'experiment'");
  if (experiment->size() != 1)
    throw std::invalid_argument("config: experiment must be a single letter");

  ExperimentConfig cfg = default_config((*experiment)[0]);
  for (const auto& [key, value] : entries) {
    if (key == "experiment") {
      continue;
    } else if (key == "nodes") {
      long long n = parse_int(key, value);
      if (n < 2) throw std::invalid_argument("config: nodes must be at least 2");
      cfg.node_count = static_cast<int>(n);
    } else if (key == "width" || key == "height" || key == "range") {
      double d = parse_double(key, value);
      if (!(d > 0.0))
        throw std::invalid_argument("config: " + key + " must be positive");
      (key == "width" ? cfg.region_width
                      : key == "height" ? cfg.region_height : cfg.omni_range) = d;
    } else if (key == "model") {
      cfg.model = parse_antenna_model(value);
    } else if (key == "strategy") {
      cfg.strategy = parse_strategy(value);
    } else if (key == "sweep") {
      cfg.sweep = parse_sweep_variable(value);
    } else if (key == "values") {
      cfg.sweep_values = parse_value_list(key, value);
      if (cfg.sweep_values.empty())
        throw std::invalid_argument("config: values must not be empty");
    } else if (key == "f" || key == "p") {
      double d = parse_double(key, value);
      if (!(d >= 0.0) || d > 1.0)
        throw std::invalid_argument("config: " + key + " must lie in [0, 1]");
      (key == "f" ? cfg.traffic_fraction : cfg.rewire_fraction) = d;
    } else if (key == "beta") {
      double d = parse_double(key, value);
      if (!(d > 0.0))
        throw std::invalid_argument("config: beta must be positive");
      cfg.beta = d;
    } else if (key == "reps") {
      long long n = parse_int(key, value);
      if (n < 1) throw std::invalid_argument("config: reps must be at least 1");
      cfg.repetitions = static_cast<int>(n);
    } else if (key == "seed") {
      cfg.base_seed = static_cast<std::uint64_t>(parse_int(key, value));
    } else if (key == "out") {
      cfg.output_path = value;
    } else if (key == "max_multiple") {
      long long n = parse_int(key, value);
      if (n < 1)
        throw std::invalid_argument("config: max_multiple must be at least 1");
      cfg.max_length_multiple = static_cast<int>(n);
    } else if (key == "fbc_max") {
      long long n = parse_int(key, value);
      if (n < 3)
        throw std::invalid_argument("config: fbc_max must be at least 3");
      cfg.fbc_max_nodes = static_cast<int>(n);
    } else if (key == "rho") {
      if (value != "0" && value != "1")
        throw std::invalid_argument("config: rho must be 0 or 1");
      cfg.compute_rho = value == "1";
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

std::string summary_path_for(const std::string& output_path) {
  const std::string suffix = ".csv";
  if (output_path.size() > suffix.size() &&
      output_path.compare(output_path.size() - suffix.size(), suffix.size(),
                          suffix) == 0)
    return output_path.substr(0, output_path.size() - suffix.size()) +
           ".summary.csv";
  return output_path + ".summary.csv";
}

RunOutcome run_single(const RunParams& params) {
  if (params.node_count < 2)
    throw std::invalid_argument("run_single: need at least 2 nodes");

  // redraw until the omnidirectional graph is strongly connected, so path
  // metrics have a well-defined baseline
  const std::uint64_t layout_base = derive_seed(params.seed, kLayoutSalt);
  NodeLayout layout;
  Topology omni;
  int attempt = 0;
  for (;; ++attempt) {
    if (attempt > 1000)
      throw std::runtime_error(
          "run_single: no strongly connected layout found; density too low");
    layout = place_nodes(params.node_count, params.region_width,
                         params.region_height, params.omni_range,
                         layout_base + static_cast<std::uint64_t>(attempt));
    omni = build_omni_graph(layout);
    if (strongly_connected(omni)) break;
  }

  const PathStats base_stats = path_stats(omni);
  const double base_cc = clustering_coefficient(omni);

  // traffic only matters when something reads betweenness off it
  const bool need_traffic = params.strategy == Strategy::centralized_topk ||
                            params.strategy == Strategy::distributed_beta ||
                            params.compute_rho;
  std::vector<double> wfb;
  HopDirectionTable hop_directions;
  if (need_traffic) {
    auto flows = generate_flows(params.node_count, params.traffic_fraction,
                                derive_seed(params.seed, kTrafficSalt));
    TransmissionLog log = simulate_flows(omni, flows);
    wfb = run_wfb(omni, log);
    hop_directions = record_hop_directions(log, layout);
  }

  std::vector<int> selected;
  switch (params.strategy) {
    case Strategy::none:
      break;
    case Strategy::randomized:
      selected = select_random(params.node_count, params.rewire_fraction,
                               derive_seed(params.seed, kSelectionSalt));
      break;
    case Strategy::centralized_topk:
      selected = select_top_wfb(wfb, params.rewire_fraction);
      break;
    case Strategy::distributed_beta:
      selected = select_distributed(wfb, omni, params.beta);
      break;
  }

  PathStats stats = base_stats;
  double cc = base_cc;
  if (!selected.empty()) {
    // randomized beams point anywhere; informed strategies reuse the relay
    // directions and fall back to random for nodes that never relayed
    static const HopDirectionTable no_records;
    const HopDirectionTable& records =
        params.strategy == Strategy::randomized ? no_records : hop_directions;
    auto directions = assign_directions(selected, records,
                                        derive_seed(params.seed, kDirectionSalt));
    const double density = params.node_count /
                           (params.region_width * params.region_height);
    const int neighborhood = static_cast<int>(
        std::llround(density * pi * params.omni_range * params.omni_range));
    auto choice = optimize_beamwidth(neighborhood, params.max_length_multiple,
                                     params.omni_range);
    auto plan = make_beam_plan(params.model, params.strategy,
                               params.omni_range, choice, params.node_count,
                               selected, directions);
    Topology rewired = apply_beams(layout, plan);
    stats = path_stats(rewired);
    if (stats.reachable_pairs == 0)
      throw undefined_metric_error("run_single: rewired graph has no reachable pair");
    cc = clustering_coefficient(rewired);
  }

  RunOutcome outcome;
  outcome.layout_retries = attempt;
  outcome.report.apl = stats.apl;
  outcome.report.apl_ratio = stats.apl / base_stats.apl;
  outcome.report.cc = cc;
  outcome.report.cc_ratio = base_cc > 0.0 ? cc / base_cc : 0.0;
  outcome.report.unidirectional_fraction = stats.unidirectional_fraction;
  outcome.report.reachable_pair_fraction = stats.reachable_fraction;
  outcome.report.diameter = euclidean_diameter(layout);
  outcome.report.realized_p =
      static_cast<double>(selected.size()) / params.node_count;

  if (params.compute_rho) {
    if (params.node_count > params.fbc_max_nodes)
      throw std::invalid_argument(
          "run_single: node count exceeds fbc_max_nodes for rank validation");
    auto fbc = flow_betweenness_oracle(omni);
    outcome.rho = spearman_rho(fractional_ranks(wfb), fractional_ranks(fbc));
  }
  return outcome;
}

namespace {

struct SummarySeries {
  std::vector<double> values;

  void add(double v) { values.push_back(v); }

  double mean() const {
    double m = 0.0;
    for (double v : values) m += v;
    return values.empty() ? 0.0 : m / static_cast<double>(values.size());
  }

  double stddev() const {
    const int n = static_cast<int>(values.size());
    if (n < 2) return 0.0;
    const double m = mean();
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(n - 1));
  }
};

}  // namespace

void run_experiment(const ExperimentConfig& config, std::ostream& results,
                    std::ostream& summary) {
  if (config.sweep_values.empty())
    throw std::invalid_argument("run_experiment: no sweep values");
  if (config.repetitions < 1)
    throw std::invalid_argument("run_experiment: repetitions must be at least 1");

  results << metrics_csv_header(config.compute_rho) << '\n';

  std::vector<std::string> metric_names = {"apl",         "apl_ratio",
                                           "cc",          "cc_ratio",
                                           "unidir_frac", "reach_frac",
                                           "p"};
  if (config.compute_rho) metric_names.push_back("rho");
  std::vector<std::vector<SummarySeries>> series(
      config.sweep_values.size(),
      std::vector<SummarySeries>(metric_names.size()));

  char buf[256];
  for (int rep = 0; rep < config.repetitions; ++rep) {
    const std::uint64_t seed =
        config.base_seed + static_cast<std::uint64_t>(rep);
    for (std::size_t vi = 0; vi < config.sweep_values.size(); ++vi) {
      const double value = config.sweep_values[vi];

      RunParams params;
      params.node_count = config.node_count;
      params.region_width = config.region_width;
      params.region_height = config.region_height;
      params.omni_range = config.omni_range;
      params.model = config.model;
      params.strategy = config.strategy;
      params.rewire_fraction = config.rewire_fraction;
      params.beta = config.beta;
      params.traffic_fraction = config.traffic_fraction;
      params.max_length_multiple = config.max_length_multiple;
      params.seed = seed;
      params.compute_rho = config.compute_rho;
      params.fbc_max_nodes = config.fbc_max_nodes;
      switch (config.sweep) {
        case SweepVariable::rewire_fraction:
          params.rewire_fraction = value;
          break;
        case SweepVariable::traffic_fraction:
          params.traffic_fraction = value;
          break;
        case SweepVariable::beta:
          params.beta = value;
          break;
        case SweepVariable::region_size:
          params.region_width = params.region_height = value;
          break;
      }

      try {
        RunOutcome outcome = run_single(params);
        if (outcome.layout_retries > 0) {
          std::snprintf(buf, sizeof buf,
                        "# note: seed=%llu sweep=%.6f layout_retries=%d\n",
                        static_cast<unsigned long long>(seed), value,
                        outcome.layout_retries);
          results << buf;
        }
        CsvRowContext ctx;
        ctx.seed = seed;
        ctx.strategy = to_string(config.strategy);
        ctx.model = config.strategy == Strategy::none
                        ? "none"
                        : to_string(config.model);
        ctx.node_count = params.node_count;
        ctx.width = params.region_width;
        ctx.height = params.region_height;
        ctx.beta = params.beta;
        ctx.with_rho = config.compute_rho;
        ctx.rho = outcome.rho;
        results << metrics_csv_row(ctx, outcome.report) << '\n';

        const MetricsReport& rp = outcome.report;
        double numbers[] = {rp.apl,
                            rp.apl_ratio,
                            rp.cc,
                            rp.cc_ratio,
                            rp.unidirectional_fraction,
                            rp.reachable_pair_fraction,
                            rp.realized_p};
        for (std::size_t mi = 0; mi < 7; ++mi)
          series[vi][mi].add(numbers[mi]);
        if (config.compute_rho) series[vi][7].add(outcome.rho);
      } catch (const std::exception& e) {
        std::snprintf(buf, sizeof buf, "# error: seed=%llu sweep=%.6f %s\n",
                      static_cast<unsigned long long>(seed), value, e.what());
        results << buf;
      }
    }
  }

  summary << "sweep_value,metric,mean,stddev,count\n";
  for (std::size_t vi = 0; vi < config.sweep_values.size(); ++vi)
    for (std::size_t mi = 0; mi < metric_names.size(); ++mi) {
      const SummarySeries& s = series[vi][mi];
      std::snprintf(buf, sizeof buf, "%.6f,%s,%.6f,%.6f,%zu\n",
                    config.sweep_values[vi], metric_names[mi].c_str(),
                    s.mean(), s.stddev(), s.values.size());
      summary << buf;
    }
}

}  // namespace smallworld
