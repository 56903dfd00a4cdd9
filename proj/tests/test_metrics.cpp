#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "smallworld/errors.hpp"
#include "smallworld/metrics.hpp"
#include "smallworld/rng.hpp"
#include "smallworld/serial_ref.hpp"
#include "smallworld/topology.hpp"

using namespace smallworld;

namespace {

Topology random_digraph(Rng& rng, int n, double edge_prob) {
  Topology topo;
  topo.node_count = n;
  topo.out_edges.resize(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.uniform01() < edge_prob) topo.out_edges[u].push_back(v);
  return topo;
}

}  // namespace

TEST_CASE("path stats on a directed chain") {
  Topology chain{3, {{1}, {2}, {}}};
  PathStats stats = path_stats(chain);
  CHECK_EQ(stats.reachable_pairs, 3);
  CHECK_EQ(stats.apl, doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK_EQ(stats.reachable_fraction, 0.5);
  CHECK_EQ(stats.unidirectional_fraction, 1.0);
}

TEST_CASE("path stats on a symmetric cycle") {
  Topology cycle{4, {{1, 3}, {0, 2}, {1, 3}, {0, 2}}};
  PathStats stats = path_stats(cycle);
  CHECK_EQ(stats.reachable_pairs, 12);
  CHECK_EQ(stats.apl, doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK_EQ(stats.reachable_fraction, 1.0);
  CHECK_EQ(stats.unidirectional_fraction, 0.0);
}

TEST_CASE("path stats on a complete triangle") {
  Topology k3{3, {{1, 2}, {0, 2}, {0, 1}}};
  PathStats stats = path_stats(k3);
  CHECK_EQ(stats.apl, 1.0);
  CHECK_EQ(stats.reachable_fraction, 1.0);
}

TEST_CASE("a single directed edge is a one-way pair") {
  Topology pair{2, {{1}, {}}};
  PathStats stats = path_stats(pair);
  CHECK_EQ(stats.reachable_pairs, 1);
  CHECK_EQ(stats.apl, 1.0);
  CHECK_EQ(stats.reachable_fraction, 0.5);
  CHECK_EQ(stats.unidirectional_fraction, 1.0);
}

TEST_CASE("edgeless graphs have no defined path length") {
  Topology isolated{3, {{}, {}, {}}};
  PathStats stats = path_stats(isolated);
  CHECK_EQ(stats.reachable_pairs, 0);
  CHECK_EQ(stats.unidirectional_fraction, 0.0);
  CHECK_THROWS_AS(average_path_length(isolated), undefined_metric_error);
  CHECK_THROWS_AS(path_stats(Topology{1, {{}}}), std::invalid_argument);
}

TEST_CASE("average_path_length mirrors path_stats") {
  Topology chain{3, {{1}, {2}, {}}};
  auto [apl, reach] = average_path_length(chain);
  PathStats stats = path_stats(chain);
  CHECK_EQ(apl, stats.apl);
  CHECK_EQ(reach, stats.reachable_fraction);
  CHECK_EQ(unidirectional_fraction(chain), stats.unidirectional_fraction);
}

TEST_CASE("serial and parallel path stats agree exactly") {
  Rng rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.below(39));
    Topology topo = random_digraph(rng, n, 0.15);
    PathStats fast = path_stats(topo);
    PathStats ref = serial::path_stats(topo);
    CHECK_EQ(fast.apl, ref.apl);
    CHECK_EQ(fast.reachable_fraction, ref.reachable_fraction);
    CHECK_EQ(fast.unidirectional_fraction, ref.unidirectional_fraction);
    CHECK_EQ(fast.reachable_pairs, ref.reachable_pairs);
  }

  NodeLayout layout = place_nodes(150, 8.0, 8.0, 1.0, 7);
  Topology geo = build_omni_graph(layout);
  PathStats fast = path_stats(geo);
  PathStats ref = serial::path_stats(geo);
  CHECK_EQ(fast.apl, ref.apl);
  CHECK_EQ(fast.reachable_pairs, ref.reachable_pairs);
}

TEST_CASE("symmetric graphs never have one-way pairs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    NodeLayout layout = place_nodes(40, 6.0, 6.0, 1.0, seed);
    Topology topo = build_omni_graph(layout);
    CHECK_EQ(path_stats(topo).unidirectional_fraction, 0.0);
  }
}

TEST_CASE("clustering coefficient fixtures") {
  Topology k4{4, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
  CHECK_EQ(clustering_coefficient(k4), 1.0);

  Topology star{5, {{1, 2, 3, 4}, {0}, {0}, {0}, {0}}};
  CHECK_EQ(clustering_coefficient(star), 0.0);

  // triangle 0-1-2 plus a pendant on node 2
  Topology pendant{4, {{1, 2}, {0, 2}, {0, 1, 3}, {2}}};
  CHECK_EQ(clustering_coefficient(pendant),
           doctest::Approx(7.0 / 9.0).epsilon(1e-12));

  Topology sparse{3, {{1}, {2}, {}}};
  CHECK_EQ(clustering_coefficient(sparse), 0.0);

  // one-way link between neighbors counts for one ordered pair only
  Topology partial{3, {{1, 2}, {2}, {}}};
  CHECK_EQ(clustering_coefficient(partial), 0.5);

  CHECK_THROWS_AS(clustering_coefficient(Topology{}), std::invalid_argument);
}

TEST_CASE("path metrics ignore node labels") {
  Rng rng(616);
  Topology topo = random_digraph(rng, 30, 0.12);
  std::vector<int> perm(30);
  for (int i = 0; i < 30; ++i) perm[i] = i;
  for (int i = 29; i > 0; --i)
    std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);

  Topology relabeled;
  relabeled.node_count = 30;
  relabeled.out_edges.resize(30);
  for (int u = 0; u < 30; ++u) {
    for (int v : topo.out_edges[u]) relabeled.out_edges[perm[u]].push_back(perm[v]);
    std::sort(relabeled.out_edges[perm[u]].begin(),
              relabeled.out_edges[perm[u]].end());
  }

  PathStats a = path_stats(topo);
  PathStats b = path_stats(relabeled);
  CHECK_EQ(a.apl, b.apl);
  CHECK_EQ(a.reachable_pairs, b.reachable_pairs);
  CHECK_EQ(a.unidirectional_fraction, b.unidirectional_fraction);
  CHECK_EQ(clustering_coefficient(topo),
           doctest::Approx(clustering_coefficient(relabeled)).epsilon(1e-12));
}

TEST_CASE("log growth fit recovers an exact line") {
  LogGrowthFit fit = log_growth_fit({{2, 3}, {4, 5}, {8, 7}});
  CHECK_EQ(fit.slope, doctest::Approx(2.0 / std::log(2.0)).epsilon(1e-12));
  CHECK_EQ(fit.intercept, doctest::Approx(1.0).epsilon(1e-9));
  CHECK_EQ(fit.r_squared, doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("log growth fit of constant values") {
  LogGrowthFit fit = log_growth_fit({{2, 3}, {4, 3}, {8, 3}});
  CHECK_EQ(fit.slope, 0.0);
  CHECK_EQ(fit.intercept, 3.0);
  CHECK_EQ(fit.r_squared, 1.0);
}

TEST_CASE("log growth fit quantifies curvature") {
  LogGrowthFit fit = log_growth_fit({{2, 1}, {4, 2}, {8, 4}});
  CHECK_EQ(fit.r_squared, doctest::Approx(27.0 / 28.0).epsilon(1e-12));
  CHECK_LT(fit.r_squared, 1.0);
}

TEST_CASE("log growth fit rejects degenerate samples") {
  CHECK_THROWS_AS(log_growth_fit({{2, 1}, {4, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(log_growth_fit({{2, 1}, {2, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(log_growth_fit({{2, 1}, {0, 2}, {4, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(log_growth_fit({{2, 1}, {-3, 2}, {4, 3}}), std::invalid_argument);
}

TEST_CASE("csv header and row layout") {
  CHECK_EQ(metrics_csv_header(false),
           "seed,strategy,model,N,width,height,p,beta,apl,apl_ratio,cc,cc_ratio,"
           "unidir_frac,reach_frac,D");
  CHECK_EQ(metrics_csv_header(true),
           "seed,strategy,model,N,width,height,p,beta,apl,apl_ratio,cc,cc_ratio,"
           "unidir_frac,reach_frac,D,rho");

  CsvRowContext ctx;
  ctx.seed = 7;
  ctx.strategy = "randomized";
  ctx.model = "sector";
  ctx.node_count = 5;
  ctx.width = 10.0;
  ctx.height = 8.0;
  ctx.beta = 2.0;
  MetricsReport report;
  report.apl = 2.5;
  report.apl_ratio = 0.75;
  report.cc = 0.5;
  report.cc_ratio = 0.8;
  report.unidirectional_fraction = 0.1;
  report.reachable_pair_fraction = 1.0;
  report.diameter = 12.5;
  report.realized_p = 0.2;
  CHECK_EQ(metrics_csv_row(ctx, report),
           "7,randomized,sector,5,10.000000,8.000000,0.200000,2.000000,"
           "2.500000,0.750000,0.500000,0.800000,0.100000,1.000000,12.500000");

  ctx.with_rho = true;
  ctx.rho = 0.43;
  CHECK_EQ(metrics_csv_row(ctx, report),
           "7,randomized,sector,5,10.000000,8.000000,0.200000,2.000000,"
           "2.500000,0.750000,0.500000,0.800000,0.100000,1.000000,12.500000,"
           "0.430000");
}
