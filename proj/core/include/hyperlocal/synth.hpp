#pragma once

#include <cstddef>
#include <cstdint>

#include "hyperlocal/io.hpp"
#include "hyperlocal/splitting.hpp"

namespace hyperlocal {

// Planted-cluster hypergraphs. Clusters occupy consecutive id ranges and are
// labeled c000, c001, ...; leftover nodes form an unlabeled background.
//
// Every region is generated from its own RNG stream derived from (seed,
// region), so cluster c's internal edges do not depend on n_nodes or on the
// other regions. Coverage passes shuffle a region and chain it into edges,
// guaranteeing no isolated nodes; random intra edges and cross edges add
// density and boundary on top.
struct SynthParams {
  NodeId n_nodes = 0;
  std::size_t n_clusters = 1;
  std::size_t cluster_size_min = 0;
  std::size_t cluster_size_max = 0;
  std::size_t edge_size_min = 2;
  std::size_t edge_size_max = 4;
  std::size_t coverage_passes = 2;
  double intra_edges_per_node = 2.0;  // random internal edges per cluster node
  double cross_fraction = 0.05;       // cross edges as a fraction of n_nodes

  // wide edges straddling one cluster and the background; zero disables them
  std::size_t noise_edges = 0;
  std::size_t noise_edge_size = 0;
  std::size_t noise_pins_in_cluster = 2;

  std::uint64_t seed = 1;
};

LabeledDataset synth_planted(const SynthParams& params, const SplittingSpec& spec);

}  // namespace hyperlocal
