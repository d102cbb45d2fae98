#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <hyperlocal/hypergraph.hpp>
#include <hyperlocal/nodeset.hpp>

namespace testsupport {

using hyperlocal::EdgeId;
using hyperlocal::Hypergraph;
using hyperlocal::NodeId;
using hyperlocal::NodeSet;

// Shortest-augmenting-path max flow, written directly from the definition as
// an independent reference for the push-relabel solver. Infinite capacities
// ride on IEEE arithmetic.
class AugmentingPathFlow {
 public:
  explicit AugmentingPathFlow(NodeId n);
  void add_arc(NodeId from, NodeId to, double capacity);
  double max_flow(NodeId s, NodeId t);
  NodeSet residual_reachable(NodeId s) const;

 private:
  struct Arc {
    NodeId to;
    double cap;
    double flow;
  };
  double residual(std::size_t a) const;

  NodeId n_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

// Random test hypergraph: m edges of 2..kmax pins over n nodes, integer or
// fractional weights, gadget-encodable splittings with assorted deltas.
struct RandomHypergraphParams {
  NodeId n = 10;
  std::size_t m = 14;
  std::size_t kmax = 5;
  bool fractional_weights = false;
  std::size_t max_delta = 3;
};

Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomHypergraphParams& params);

// Random 2-uniform graph with the all-or-nothing splitting on every edge.
Hypergraph random_graph(std::mt19937_64& rng, NodeId n, std::size_t m,
                        bool fractional_weights);

NodeSet random_nonempty_subset(std::mt19937_64& rng, NodeId n);

// Localized cut objective for one fixed bipartition of a single hyperedge
// gadget, minimized over the four placements of the auxiliary pair; written
// from arithmetic, no flow involved.
double gadget_cost_by_enumeration(std::size_t k, std::size_t side, double delta,
                                  double scale);

// Graph-native evaluation on 2-uniform inputs: cut counts singly-covered
// edges, degrees are recomputed from edge weights. Used to cross-check the
// hypergraph code path against the plain-graph definitions.
double graph_cut(const Hypergraph& g, const NodeSet& s);
double graph_hlc(const Hypergraph& g, const NodeSet& r, double eps, const NodeSet& s);

}  // namespace testsupport
