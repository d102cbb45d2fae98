#pragma once

#include <span>
#include <vector>

#include "hyperlocal/hypergraph.hpp"
#include "hyperlocal/maxflow.hpp"
#include "hyperlocal/nodeset.hpp"

namespace hyperlocal {

// Auxiliary node pair standing in for one hyperedge in the reduced network.
struct GadgetPair {
  NodeId entry;
  NodeId exit;
};

// One directed min s-t cut instance. Network node 0 is the source, 1 the
// sink, included hypergraph nodes follow in ascending id order, then one
// auxiliary pair per included edge.
//
// Terminal capacities always use degrees of the full hypergraph, no matter
// how few nodes are included: the instance views a node subset, never a
// sub-hypergraph with recomputed degrees.
//
// Every included edge must be representable as scale * min(delta, i) and
// expands to entry/exit nodes with 2|e| + 1 arcs; cutting its arcs costs
// exactly the splitting penalty of the induced bipartition.
class StCutInstance {
 public:
  StCutInstance(const Hypergraph& h, const NodeSet& included_nodes,
                std::vector<EdgeId> included_edges, const NodeSet& r, double eps,
                double alpha, const NodeSet& seeds);

  // Max flow; by duality the minimum of the localized cut objective over
  // subsets of the included nodes (seeds pinned to the source side).
  double solve();

  // Source side of the minimal minimum cut, auxiliary and terminal nodes
  // stripped. Valid after solve.
  NodeSet source_side_nodes() const;

  NodeId source() const { return 0; }
  NodeId sink() const { return 1; }
  NodeId network_node(NodeId hypergraph_node) const;
  const NodeSet& included_nodes() const { return included_; }
  const std::vector<EdgeId>& included_edges() const { return edges_; }
  const std::vector<GadgetPair>& gadgets() const { return gadgets_; }
  FlowNetwork& network() { return net_; }
  const FlowNetwork& network() const { return net_; }

 private:
  NodeSet included_;
  std::vector<EdgeId> edges_;
  FlowNetwork net_;
  std::vector<GadgetPair> gadgets_;
};

// Instance over the whole hypergraph.
StCutInstance build_st_instance(const Hypergraph& h, const NodeSet& r, double eps,
                                double alpha, const NodeSet& seeds = {});

// The localized cut objective evaluated directly:
// cut(s) + alpha * (vol(r) - vol(s n r)) + alpha * eps * vol(s \ r).
double st_cut_objective(const Hypergraph& h, const NodeSet& r, double eps, double alpha,
                        const NodeSet& s);

// Same objective with the cut restricted to the given edges.
double st_cut_objective(const Hypergraph& h, std::span<const EdgeId> edges,
                        const NodeSet& r, double eps, double alpha, const NodeSet& s);

}  // namespace hyperlocal
