#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "smallworld/centrality.hpp"
#include "smallworld/harness.hpp"
#include "smallworld/layout.hpp"
#include "smallworld/metrics.hpp"
#include "smallworld/rewire.hpp"
#include "smallworld/topology.hpp"
#include "smallworld/traffic.hpp"

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  if (const char* env = std::getenv("SMALLWORLD_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
#endif

  CLI::App app{"self-organizing small-world ad hoc network simulator"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "draw a node layout and write it out");
  int gen_nodes = 300;
  double gen_width = 10.0, gen_height = 10.0, gen_range = 1.0;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "layout.txt";
  gen->add_option("-n,--nodes", gen_nodes, "node count");
  gen->add_option("--width", gen_width, "region width");
  gen->add_option("--height", gen_height, "region height");
  gen->add_option("--range", gen_range, "omnidirectional radio range");
  gen->add_option("--seed", gen_seed, "placement seed");
  gen->add_option("-o,--out", gen_out, "output path");

  auto* sim = app.add_subcommand(
      "simulate", "one seeded run; metrics as CSV on standard output");
  int sim_nodes = 300;
  double sim_width = 10.0, sim_height = 10.0, sim_range = 1.0;
  std::string sim_model = "sector", sim_strategy = "randomized";
  double sim_p = 0.1, sim_beta = 2.0, sim_f = 1.0;
  int sim_max_multiple = 6, sim_fbc_max = 100;
  std::uint64_t sim_seed = 1;
  bool sim_rho = false;
  sim->add_option("-n,--nodes", sim_nodes, "node count");
  sim->add_option("--width", sim_width, "region width");
  sim->add_option("--height", sim_height, "region height");
  sim->add_option("--range", sim_range, "omnidirectional radio range");
  sim->add_option("--model", sim_model, "antenna model: sector or ula");
  sim->add_option("--strategy", sim_strategy,
                  "none, randomized, topk or distributed");
  sim->add_option("-p", sim_p, "fraction of nodes that beamform");
  sim->add_option("--beta", sim_beta, "distributed selection threshold");
  sim->add_option("-f", sim_f, "fraction of nodes sourcing a flow");
  sim->add_option("--max-multiple", sim_max_multiple,
                  "largest beam length multiple tried");
  sim->add_option("--seed", sim_seed, "run seed");
  sim->add_flag("--rho", sim_rho,
                "also validate betweenness ranks against the exact oracle");
  sim->add_option("--fbc-max", sim_fbc_max,
                  "largest node count the oracle is allowed");

  auto* exp = app.add_subcommand("experiment",
                                 "run a configured sweep; CSV plus summary");
  std::string exp_config, exp_out;
  exp->add_option("-c,--config", exp_config, "experiment config file")
      ->required();
  exp->add_option("-o,--out", exp_out, "override the configured output path");

  auto* ora = app.add_subcommand(
      "oracle", "betweenness estimate vs exact oracle, per node");
  std::string ora_layout, ora_out;
  int ora_nodes = 100;
  double ora_width = 5.7735, ora_height = 5.7735, ora_range = 1.0;
  double ora_f = 1.0;
  std::uint64_t ora_seed = 1;
  ora->add_option("--layout", ora_layout, "layout file (generated otherwise)");
  ora->add_option("-n,--nodes", ora_nodes, "node count");
  ora->add_option("--width", ora_width, "region width");
  ora->add_option("--height", ora_height, "region height");
  ora->add_option("--range", ora_range, "omnidirectional radio range");
  ora->add_option("-f", ora_f, "fraction of nodes sourcing a flow");
  ora->add_option("--seed", ora_seed, "layout seed; flows use seed+1");
  ora->add_option("-o,--out", ora_out, "output path (standard output otherwise)");

  CLI11_PARSE(app, argc, argv);

  try {
    using namespace smallworld;

    if (gen->parsed()) {
      NodeLayout layout =
          place_nodes(gen_nodes, gen_width, gen_height, gen_range, gen_seed);
      auto out = open_output(gen_out);
      write_layout(out, layout);
    } else if (sim->parsed()) {
      RunParams params;
      params.node_count = sim_nodes;
      params.region_width = sim_width;
      params.region_height = sim_height;
      params.omni_range = sim_range;
      params.model = parse_antenna_model(sim_model);
      params.strategy = parse_strategy(sim_strategy);
      params.rewire_fraction = sim_p;
      params.beta = sim_beta;
      params.traffic_fraction = sim_f;
      params.max_length_multiple = sim_max_multiple;
      params.seed = sim_seed;
      params.compute_rho = sim_rho;
      params.fbc_max_nodes = sim_fbc_max;
      RunOutcome outcome = run_single(params);

      CsvRowContext ctx;
      ctx.seed = sim_seed;
      ctx.strategy = to_string(params.strategy);
      ctx.model = params.strategy == Strategy::none ? "none"
                                                    : to_string(params.model);
      ctx.node_count = sim_nodes;
      ctx.width = sim_width;
      ctx.height = sim_height;
      ctx.beta = sim_beta;
      ctx.with_rho = sim_rho;
      ctx.rho = outcome.rho;
      std::cout << metrics_csv_header(sim_rho) << '\n'
                << metrics_csv_row(ctx, outcome.report) << '\n';
    } else if (exp->parsed()) {
      auto config_in = open_input(exp_config);
      ExperimentConfig config = parse_config(config_in);
      if (!exp_out.empty()) config.output_path = exp_out;
      auto results = open_output(config.output_path);
      auto summary = open_output(summary_path_for(config.output_path));
      run_experiment(config, results, summary);
    } else if (ora->parsed()) {
      NodeLayout layout;
      if (!ora_layout.empty()) {
        auto in = open_input(ora_layout);
        layout = read_layout(in);
      } else {
        layout = place_nodes(ora_nodes, ora_width, ora_height, ora_range,
                             ora_seed);
      }
      Topology topo = build_omni_graph(layout);
      auto flows = generate_flows(layout.node_count(), ora_f, layout.seed + 1);
      TransmissionLog log = simulate_flows(topo, flows);
      auto wfb = run_wfb(topo, log);
      auto fbc = flow_betweenness_oracle(topo);
      if (ora_out.empty()) {
        write_centrality_table(std::cout, wfb, fbc);
      } else {
        auto out = open_output(ora_out);
        write_centrality_table(out, wfb, fbc);
      }
      try {
        double rho = spearman_rho(fractional_ranks(wfb), fractional_ranks(fbc));
        std::fprintf(stderr, "spearman_rho %.6f\n", rho);
      } catch (const std::exception& e) {
        std::fprintf(stderr, "spearman_rho undefined: %s\n", e.what());
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
