#pragma once

#include <vector>

#include "smallworld/metrics.hpp"
#include "smallworld/topology.hpp"

// Plain single-thread implementations of the heavy kernels, written
// independently of the OpenMP versions. The tests pin the parallel results
// to these, and the benchmark times one against the other.
namespace smallworld::serial {

PathStats path_stats(const Topology& topo);

// Adjacency-matrix max-flow, recomputed from scratch for every pair and
// every removal.
std::vector<double> flow_betweenness_oracle(const Topology& topo);

}  // namespace smallworld::serial
