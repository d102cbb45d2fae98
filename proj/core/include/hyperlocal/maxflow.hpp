#pragma once

#include <cstddef>
#include <vector>

#include "hyperlocal/nodeset.hpp"
#include "hyperlocal/types.hpp"

namespace hyperlocal {

// Directed flow network solved by highest-label push-relabel with the gap
// heuristic and periodic global relabeling.
//
// Arcs come in pairs: add_arc creates a forward arc with the given capacity
// and a reverse arc with capacity 0, so the residual partner of arc a is
// always a ^ 1.
//
// Infinite capacities are legal. If s and t are joined by a path of infinite
// arcs, max_flow returns the infinity sentinel without running. Otherwise the
// solver substitutes a surrogate capacity exceeding the sum of all finite
// capacities; a surrogate arc can never cross a minimum cut (any cut through
// it would beat no all-finite cut), so values, cuts and residual reachability
// match the infinite semantics exactly.
class FlowNetwork {
 public:
  using ArcId = std::size_t;

  NodeId add_node();
  NodeId add_nodes(std::size_t count);
  ArcId add_arc(NodeId from, NodeId to, double capacity);

  NodeId num_nodes() const { return num_nodes_; }
  std::size_t num_arcs() const { return arcs_.size(); }

  double capacity(ArcId a) const { return arcs_[a].cap; }
  double flow(ArcId a) const { return arcs_[a].flow; }
  NodeId head(ArcId a) const { return arcs_[a].head; }
  NodeId tail(ArcId a) const { return arcs_[a ^ 1].head; }

  // Max flow from s to t; resets any previous flow. Returns the infinity
  // sentinel when no finite cut separates s from t.
  double max_flow(NodeId s, NodeId t);

  bool solved() const { return solved_; }
  double flow_value() const;

  // Nodes reachable from s in the residual graph after a solve. This is the
  // unique minimal minimum cut's source side; it contains s and misses t.
  NodeSet min_cut_source_side() const;

  // Total capacity leaving the given side; infinite if an infinite arc crosses.
  double cut_capacity(const NodeSet& source_side) const;

  // Capacity bounds and flow conservation away from s and t.
  void check_flow() const;

 private:
  struct Arc {
    NodeId head;
    double cap;
    double flow;
  };

  double residual(ArcId a) const;
  void build_adjacency();
  bool infinite_path(NodeId s, NodeId t) const;

  std::vector<Arc> arcs_;
  NodeId num_nodes_ = 0;
  std::vector<std::size_t> csr_ptr_;    // per-node ranges into arc_order_
  std::vector<ArcId> arc_order_;        // arc ids grouped by tail, insertion order
  bool adjacency_stale_ = true;

  bool solved_ = false;
  bool unbounded_ = false;
  double flow_value_ = 0.0;
  NodeId source_ = 0;
  NodeId sink_ = 0;
  double surrogate_ = 0.0;
};

}  // namespace hyperlocal
