#include "smallworld/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "smallworld/errors.hpp"

namespace smallworld {

PathStats path_stats(const Topology& topo) {
  const int n = topo.node_count;
  if (n < 2)
    throw std::invalid_argument("path_stats: need at least 2 nodes");

  const int words = (n + 63) / 64;
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(n) * words, 0);
  std::vector<std::int64_t> dist_sum(n, 0);
  std::vector<std::int64_t> reach_count(n, 0);

#pragma omp parallel
  {
    std::vector<int> dist(n);
    std::vector<int> queue(n);
#pragma omp for schedule(dynamic, 8)
    for (int s = 0; s < n; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      int head = 0, tail = 0;
      queue[tail++] = s;
      dist[s] = 0;
      std::int64_t sum = 0, count = 0;
      std::uint64_t* row = &reach[static_cast<std::size_t>(s) * words];
      while (head < tail) {
        int u = queue[head++];
        for (int v : topo.out_edges[u])
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            queue[tail++] = v;
            sum += dist[v];
            ++count;
            row[v >> 6] |= std::uint64_t{1} << (v & 63);
          }
      }
      dist_sum[s] = sum;
      reach_count[s] = count;
    }
  }

  // reduce in id order; integer sums make the result thread-count-proof
  std::int64_t total_dist = 0, total_reach = 0;
  for (int s = 0; s < n; ++s) {
    total_dist += dist_sum[s];
    total_reach += reach_count[s];
  }

  auto reachable = [&](int u, int v) {
    return (reach[static_cast<std::size_t>(u) * words + (v >> 6)] >>
            (v & 63)) & 1u;
  };
  std::int64_t one_way = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (reachable(u, v) != reachable(v, u)) ++one_way;

  PathStats stats;
  stats.reachable_pairs = total_reach;
  stats.apl = total_reach > 0
                  ? static_cast<double>(total_dist) / static_cast<double>(total_reach)
                  : 0.0;
  const double ordered = static_cast<double>(n) * (n - 1);
  stats.reachable_fraction = static_cast<double>(total_reach) / ordered;
  stats.unidirectional_fraction = static_cast<double>(one_way) / (0.5 * ordered);
  return stats;
}

std::pair<double, double> average_path_length(const Topology& topo) {
  PathStats stats = path_stats(topo);
  if (stats.reachable_pairs == 0)
    throw undefined_metric_error("average_path_length: no reachable pair");
  return {stats.apl, stats.reachable_fraction};
}

double unidirectional_fraction(const Topology& topo) {
  return path_stats(topo).unidirectional_fraction;
}

double clustering_coefficient(const Topology& topo) {
  const int n = topo.node_count;
  if (n < 1)
    throw std::invalid_argument("clustering_coefficient: empty topology");
  double sum = 0.0;
  int qualifying = 0;
  for (int v = 0; v < n; ++v) {
    const auto& out = topo.out_edges[v];
    const int d = static_cast<int>(out.size());
    if (d < 2) continue;
    int linked = 0;
    for (int i : out)
      for (int j : out)
        if (i != j && topo.has_edge(i, j)) ++linked;
    sum += static_cast<double>(linked) / (static_cast<double>(d) * (d - 1));
    ++qualifying;
  }
  return qualifying > 0 ? sum / qualifying : 0.0;
}

LogGrowthFit log_growth_fit(
    const std::vector<std::pair<double, double>>& samples) {
  const int n = static_cast<int>(samples.size());
  if (n < 3)
    throw std::invalid_argument("log_growth_fit: need at least 3 samples");
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    if (!(samples[i].first > 0.0))
      throw std::invalid_argument("log_growth_fit: scales must be positive");
    xs[i] = std::log(samples[i].first);
    ys[i] = samples[i].second;
  }
  double mean_x = 0.0, mean_y = 0.0;
  for (int i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx <= 0.0)
    throw std::invalid_argument("log_growth_fit: scales must span distinct values");

  LogGrowthFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ss_res = 0.0, ss_tot = 0.0;
  for (int i = 0; i < n; ++i) {
    double predicted = fit.slope * xs[i] + fit.intercept;
    ss_res += (ys[i] - predicted) * (ys[i] - predicted);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

std::string metrics_csv_header(bool with_rho) {
  std::string header =
      "seed,strategy,model,N,width,height,p,beta,apl,apl_ratio,cc,cc_ratio,"
      "unidir_frac,reach_frac,D";
  if (with_rho) header += ",rho";
  return header;
}

std::string metrics_csv_row(const CsvRowContext& ctx,
                            const MetricsReport& report) {
  char buf[512];
  int len = std::snprintf(
      buf, sizeof buf,
      "%llu,%s,%s,%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f",
      static_cast<unsigned long long>(ctx.seed), ctx.strategy.c_str(),
      ctx.model.c_str(), ctx.node_count, ctx.width, ctx.height,
      report.realized_p, ctx.beta, report.apl, report.apl_ratio, report.cc,
      report.cc_ratio, report.unidirectional_fraction,
      report.reachable_pair_fraction, report.diameter);
  std::string row(buf, len);
  if (ctx.with_rho) {
    std::snprintf(buf, sizeof buf, ",%.6f", ctx.rho);
    row += buf;
  }
  return row;
}

}  // namespace smallworld
