#pragma once

#include <cstddef>
#include <vector>

#include "hyperlocal/hyperlocal.hpp"
#include "hyperlocal/hypergraph.hpp"
#include "hyperlocal/nodeset.hpp"

namespace hyperlocal {

// Candidates are neighbors of the seed set that are not seeds themselves.
// Both rankings return up to k node ids, score descending, ties broken by
// ascending id; seeds never appear in the ranking.

// Scores a candidate by how many distinct seed-incident edges contain it.
std::vector<NodeId> top_neighbors(const Hypergraph& h, const NodeSet& seeds,
                                  std::size_t k);

// Scores a candidate by the fraction of its incident edges that touch the
// seed set. Fractions are compared exactly via cross-multiplication.
std::vector<NodeId> best_neighbors(const Hypergraph& h, const NodeSet& seeds,
                                   std::size_t k);

struct CliqueExpansion {
  Hypergraph graph;                  // 2-uniform, parallel pairs merged
  std::size_t discarded_edges = 0;   // hyperedges at or above the size cap
};

// Replaces each hyperedge by a clique over its pins. Pair weight is 1 per
// contributing edge, or edge_weight / |e| when `weighted`. Hyperedges with
// max_size pins or more are dropped from the expansion.
CliqueExpansion clique_expand(const Hypergraph& h, bool weighted,
                              std::size_t max_size = 50);

// Graph specialization of the clustering routine: requires every edge to
// have exactly two pins, then runs the same localized minimization. On such
// inputs the hypergraph objective coincides with the graph one.
ClusterReport flowseed_equivalent(const Hypergraph& g, const NodeSet& r, double eps,
                                  const NodeSet& seeds = {},
                                  const MinimizeOptions& options = {});

}  // namespace hyperlocal
