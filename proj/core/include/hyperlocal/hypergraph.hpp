#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperlocal/nodeset.hpp"
#include "hyperlocal/splitting.hpp"
#include "hyperlocal/types.hpp"

namespace hyperlocal {

// Weighted hypergraph with one cardinality-based splitting function per edge.
// Pins, incidence and penalty tables live in CSR arrays; degrees and the
// total volume are cached at construction.
//
// Edges keep their input order, duplicates included (a repeated hyperedge is
// extra penalty mass). Within an edge, pins are sorted and duplicate-free.
// Edges with fewer than two distinct pins carry no penalty and are dropped.
class Hypergraph {
 public:
  struct BuildInfo {
    std::size_t dropped_degenerate_edges = 0;
  };

  Hypergraph() = default;

  // One explicit splitting per kept edge. `splittings` runs parallel to
  // `edges` before degenerate edges are removed.
  Hypergraph(NodeId num_nodes, const std::vector<std::vector<NodeId>>& edges,
             std::vector<CardinalitySplitting> splittings, BuildInfo* info = nullptr);

  // Uniform family: splitting of edge e is spec.instantiate(|e|, weight_e).
  Hypergraph(NodeId num_nodes, const std::vector<std::vector<NodeId>>& edges,
             const std::vector<double>& edge_weights, const SplittingSpec& spec,
             BuildInfo* info = nullptr);

  // Same structure and edge weights under a different splitting family.
  Hypergraph with_splitting(const SplittingSpec& spec) const;

  NodeId num_nodes() const { return n_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edge_ptr_.size() - 1); }
  std::size_t num_pins() const { return pins_.size(); }
  std::size_t max_edge_size() const { return max_edge_size_; }

  std::span<const NodeId> edge(EdgeId e) const;
  std::size_t edge_size(EdgeId e) const;
  double edge_weight(EdgeId e) const;
  std::span<const EdgeId> incident_edges(NodeId v) const;
  CardinalitySplitting splitting(EdgeId e) const;

  // w_e(A) for |A n e| = side_size
  double split_penalty(EdgeId e, std::size_t side_size) const;

  // d_v = sum over incident edges of the penalty for separating v alone
  double degree(NodeId v) const;
  double total_volume() const { return total_volume_; }
  double volume(const NodeSet& s) const;

  // All work below touches only edges incident to s, never the full edge set.
  double cut(const NodeSet& s) const;
  double cut_over(std::span<const EdgeId> edges, const NodeSet& s) const;
  std::vector<EdgeId> boundary(const NodeSet& s) const;
  std::vector<EdgeId> incident_edge_union(const NodeSet& s) const;
  NodeSet neighborhood(const NodeSet& s) const;

  double conductance(const NodeSet& s) const;
  double normalized_cut(const NodeSet& s) const;

  // Omega_{r,eps}(s) = vol(s n r) - eps * vol(s \ r); requires eps >= 0
  double overlap_score(const NodeSet& r, double eps, const NodeSet& s) const;
  // cut(s) / Omega(s) when the score is positive, infinity otherwise
  double hlc(const NodeSet& r, double eps, const NodeSet& s) const;

  void check_consistency() const;

 private:
  void build(NodeId num_nodes, const std::vector<std::vector<NodeId>>& edges,
             std::vector<CardinalitySplitting> splittings, BuildInfo* info);

  NodeId n_ = 0;
  std::vector<std::size_t> edge_ptr_;
  std::vector<NodeId> pins_;
  std::vector<double> edge_weight_;
  std::vector<std::size_t> split_ptr_;
  std::vector<double> split_val_;
  std::vector<std::size_t> node_ptr_;
  std::vector<EdgeId> incident_;
  std::vector<double> degree_;
  double total_volume_ = 0.0;
  std::size_t max_edge_size_ = 0;
};

}  // namespace hyperlocal
