// Times the OpenMP kernels against their serial references on the same
// inputs and checks the outputs still agree. Run with SMALLWORLD_THREADS
// set to compare thread counts; the default build on one core should show
// parity, not speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "smallworld/centrality.hpp"
#include "smallworld/layout.hpp"
#include "smallworld/metrics.hpp"
#include "smallworld/serial_ref.hpp"
#include "smallworld/topology.hpp"

using namespace smallworld;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

Topology dense_geometric_graph(int n, double width, std::uint64_t seed) {
  // redraw until strongly connected so both kernels see the worst case of
  // every BFS reaching every node
  for (std::uint64_t attempt = 0;; ++attempt) {
    NodeLayout layout = place_nodes(n, width, width, 1.0, seed + attempt);
    Topology topo = build_omni_graph(layout);
    if (strongly_connected(topo)) return topo;
  }
}

}  // namespace

int main() {
#ifdef _OPENMP
  if (const char* env = std::getenv("SMALLWORLD_THREADS"))
    omp_set_num_threads(std::atoi(env));
  std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp disabled, serial build\n");
#endif

  {
    Topology topo = dense_geometric_graph(900, 15.0, 41);
    std::printf("path_stats: %d nodes\n", topo.node_count);

    auto start = clock_type::now();
    PathStats serial = serial::path_stats(topo);
    const double serial_s = seconds_since(start);

    start = clock_type::now();
    PathStats parallel = path_stats(topo);
    const double parallel_s = seconds_since(start);

    if (serial.apl != parallel.apl ||
        serial.reachable_pairs != parallel.reachable_pairs ||
        serial.unidirectional_fraction != parallel.unidirectional_fraction) {
      std::printf("MISMATCH: serial apl %.12f vs parallel apl %.12f\n",
                  serial.apl, parallel.apl);
      return 1;
    }
    std::printf("  serial   %8.3f s\n  parallel %8.3f s  (apl %.6f, equal outputs)\n",
                serial_s, parallel_s, parallel.apl);
  }

  {
    Topology topo = dense_geometric_graph(48, 3.6, 17);
    std::printf("flow_betweenness_oracle: %d nodes\n", topo.node_count);

    auto start = clock_type::now();
    std::vector<double> reference = serial::flow_betweenness_oracle(topo);
    const double serial_s = seconds_since(start);

    start = clock_type::now();
    std::vector<double> warm = flow_betweenness_oracle(topo);
    const double warm_s = seconds_since(start);

    if (reference != warm) {
      std::printf("MISMATCH: warm-start oracle differs from the serial reference\n");
      return 1;
    }
    std::printf("  serial   %8.3f s\n  warm     %8.3f s  (equal outputs)\n",
                serial_s, warm_s);
  }

  return 0;
}
