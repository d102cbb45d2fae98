#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperlocal/hypergraph.hpp"
#include "hyperlocal/nodeset.hpp"

namespace hyperlocal {

// Sub-instance grown around the reference set: nodes V_L start at R and its
// neighborhood, edges E_L at the edges touching R. Growth adds the
// neighborhood and edges of newly explored nodes, so members of E_L always
// lie entirely inside V_L.
class LocalHypergraph {
 public:
  LocalHypergraph(const Hypergraph& h, const NodeSet& r);

  // Marks `fresh` (cut-set nodes outside R not seen before) as explored and
  // pulls in their neighborhood and edges.
  void grow(const NodeSet& fresh);

  const NodeSet& nodes() const { return nodes_; }
  std::span<const EdgeId> edges() const { return edges_; }
  const NodeSet& explored() const { return explored_; }

 private:
  const Hypergraph& h_;
  NodeSet nodes_;
  std::vector<EdgeId> edges_;
  NodeSet explored_;
};

struct RoundStats {
  std::size_t local_nodes = 0;
  std::size_t local_edges = 0;
  std::size_t explored = 0;
  std::size_t newly_explored = 0;
  double flow_value = 0.0;
};

struct SolveStats {
  std::vector<RoundStats> rounds;
  std::size_t isolated_reference_nodes_removed = 0;
  double vol_r = 0.0;
  double eps = 0.0;
  double explored_volume = 0.0;
  std::size_t terminal_degree_cap = 0;  // largest hyperedge size, at least 2
  std::size_t final_local_nodes = 0;
  std::size_t final_local_edges = 0;
};

struct LocalSolveResult {
  NodeSet cut_set;
  double cut_value = 0.0;
  SolveStats stats;
};

// Minimizes cut(S) + alpha * (vol(R) - vol(S n R)) + alpha * eps * vol(S \ R)
// over all S by solving min s-t cuts on the grown sub-instance until no new
// cut-set node appears outside it. Work per round depends on vol(R) and eps,
// never on the size of the full hypergraph.
LocalSolveResult solve_strongly_local(const Hypergraph& h, const NodeSet& r, double eps,
                                      double alpha, const NodeSet& seeds = {});

// Worst-case growth ceilings for a run, valid when every splitting penalty
// is at least 1 wherever it is nonzero (unit-scale delta-linear qualifies):
// edges <= 1.5 * (1 + 1/eps) * vol(R), nodes <= k * vol(R) * (1 + 1/eps),
// explored volume <= vol(R) / eps.
struct LocalityBounds {
  double edge_bound = 0.0;
  double node_bound = 0.0;
  double explored_volume_bound = 0.0;
  bool respected = false;
};

LocalityBounds locality_bounds(const SolveStats& stats);

// True when the bounds above apply: every nonzero splitting penalty >= 1.
bool has_unit_minimum_penalty(const Hypergraph& h);

}  // namespace hyperlocal
