#include "hyperlocal/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace hyperlocal {

namespace {

std::size_t intersection_size(std::span<const NodeId> pins, const NodeSet& s) {
  // pins per edge are few; binary search in s wins over a full merge
  std::size_t count = 0;
  for (NodeId v : pins) count += s.contains(v) ? 1 : 0;
  return count;
}

}  // namespace

Hypergraph::Hypergraph(NodeId num_nodes, const std::vector<std::vector<NodeId>>& edges,
                       std::vector<CardinalitySplitting> splittings, BuildInfo* info) {
  if (splittings.size() != edges.size()) {
    throw InputError("hypergraph: need one splitting per edge");
  }
  build(num_nodes, edges, std::move(splittings), info);
}

Hypergraph::Hypergraph(NodeId num_nodes, const std::vector<std::vector<NodeId>>& edges,
                       const std::vector<double>& edge_weights, const SplittingSpec& spec,
                       BuildInfo* info) {
  if (edge_weights.size() != edges.size()) {
    throw InputError("hypergraph: need one weight per edge");
  }
  // instantiate on deduplicated pin counts so tables always match edge sizes
  std::vector<std::vector<NodeId>> clean;
  clean.reserve(edges.size());
  std::vector<CardinalitySplitting> splittings;
  splittings.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(edge_weights[i] > 0.0) || std::isinf(edge_weights[i])) {
      throw InputError("hypergraph: edge weights must be positive and finite");
    }
    std::vector<NodeId> pins = edges[i];
    std::sort(pins.begin(), pins.end());
    pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
    if (pins.size() >= 2) {
      splittings.push_back(spec.instantiate(pins.size(), edge_weights[i]));
    } else {
      splittings.push_back(CardinalitySplitting::from_table(
          std::max<std::size_t>(pins.size(), 1), {0.0}));
    }
    clean.push_back(std::move(pins));
  }
  build(num_nodes, clean, std::move(splittings), info);
  edge_weight_.clear();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<NodeId> pins = edges[i];
    std::sort(pins.begin(), pins.end());
    pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
    if (pins.size() >= 2) edge_weight_.push_back(edge_weights[i]);
  }
}

void Hypergraph::build(NodeId num_nodes, const std::vector<std::vector<NodeId>>& edges,
                       std::vector<CardinalitySplitting> splittings, BuildInfo* info) {
  n_ = num_nodes;
  edge_ptr_.assign(1, 0);
  split_ptr_.assign(1, 0);
  BuildInfo local;

  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<NodeId> pins = edges[i];
    std::sort(pins.begin(), pins.end());
    pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
    if (!pins.empty() && pins.back() >= n_) {
      throw InputError("hypergraph: edge " + std::to_string(i) +
                       " references node " + std::to_string(pins.back()) +
                       " outside [0, " + std::to_string(n_) + ")");
    }
    if (pins.size() < 2) {
      ++local.dropped_degenerate_edges;
      continue;
    }
    const CardinalitySplitting& sf = splittings[i];
    if (sf.edge_size() != pins.size()) {
      throw InputError("hypergraph: splitting of edge " + std::to_string(i) +
                       " is for size " + std::to_string(sf.edge_size()) +
                       ", edge has " + std::to_string(pins.size()) + " pins");
    }
    pins_.insert(pins_.end(), pins.begin(), pins.end());
    edge_ptr_.push_back(pins_.size());
    split_val_.insert(split_val_.end(), sf.table().begin(), sf.table().end());
    split_ptr_.push_back(split_val_.size());
    edge_weight_.push_back(1.0);
    max_edge_size_ = std::max(max_edge_size_, pins.size());
  }

  const EdgeId m = num_edges();
  node_ptr_.assign(n_ + 1, 0);
  for (NodeId v : pins_) ++node_ptr_[v + 1];
  for (NodeId v = 0; v < n_; ++v) node_ptr_[v + 1] += node_ptr_[v];
  incident_.resize(pins_.size());
  std::vector<std::size_t> fill(node_ptr_.begin(), node_ptr_.end() - 1);
  for (EdgeId e = 0; e < m; ++e) {
    for (std::size_t p = edge_ptr_[e]; p < edge_ptr_[e + 1]; ++p) {
      incident_[fill[pins_[p]]++] = e;
    }
  }

  degree_.assign(n_, 0.0);
  for (EdgeId e = 0; e < m; ++e) {
    double single = split_val_[split_ptr_[e] + 1];
    for (std::size_t p = edge_ptr_[e]; p < edge_ptr_[e + 1]; ++p) {
      degree_[pins_[p]] += single;
    }
  }
  total_volume_ = 0.0;
  for (double d : degree_) total_volume_ += d;

  if (info) *info = local;
}

Hypergraph Hypergraph::with_splitting(const SplittingSpec& spec) const {
  std::vector<std::vector<NodeId>> edges(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    auto pins = edge(e);
    edges[e].assign(pins.begin(), pins.end());
  }
  return Hypergraph(n_, edges, edge_weight_, spec);
}

std::span<const NodeId> Hypergraph::edge(EdgeId e) const {
  if (e >= num_edges()) throw InputError("hypergraph: edge id out of range");
  return {pins_.data() + edge_ptr_[e], edge_ptr_[e + 1] - edge_ptr_[e]};
}

std::size_t Hypergraph::edge_size(EdgeId e) const {
  if (e >= num_edges()) throw InputError("hypergraph: edge id out of range");
  return edge_ptr_[e + 1] - edge_ptr_[e];
}

double Hypergraph::edge_weight(EdgeId e) const {
  if (e >= num_edges()) throw InputError("hypergraph: edge id out of range");
  return edge_weight_[e];
}

std::span<const EdgeId> Hypergraph::incident_edges(NodeId v) const {
  if (v >= n_) throw InputError("hypergraph: node id out of range");
  return {incident_.data() + node_ptr_[v], node_ptr_[v + 1] - node_ptr_[v]};
}

CardinalitySplitting Hypergraph::splitting(EdgeId e) const {
  if (e >= num_edges()) throw InputError("hypergraph: edge id out of range");
  return CardinalitySplitting::from_table(
      edge_size(e), {split_val_.begin() + static_cast<std::ptrdiff_t>(split_ptr_[e]),
                     split_val_.begin() + static_cast<std::ptrdiff_t>(split_ptr_[e + 1])});
}

double Hypergraph::split_penalty(EdgeId e, std::size_t side_size) const {
  if (e >= num_edges()) throw InputError("hypergraph: edge id out of range");
  std::size_t k = edge_size(e);
  if (side_size > k) throw InputError("hypergraph: side larger than the edge");
  return split_val_[split_ptr_[e] + std::min(side_size, k - side_size)];
}

double Hypergraph::degree(NodeId v) const {
  if (v >= n_) throw InputError("hypergraph: node id out of range");
  return degree_[v];
}

double Hypergraph::volume(const NodeSet& s) const {
  double vol = 0.0;
  for (NodeId v : s) vol += degree(v);
  return vol;
}

std::vector<EdgeId> Hypergraph::incident_edge_union(const NodeSet& s) const {
  std::vector<EdgeId> edges;
  for (NodeId v : s) {
    auto inc = incident_edges(v);
    edges.insert(edges.end(), inc.begin(), inc.end());
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

double Hypergraph::cut(const NodeSet& s) const {
  return cut_over(incident_edge_union(s), s);
}

double Hypergraph::cut_over(std::span<const EdgeId> edges, const NodeSet& s) const {
  double total = 0.0;
  for (EdgeId e : edges) {
    total += split_penalty(e, intersection_size(edge(e), s));
  }
  return total;
}

std::vector<EdgeId> Hypergraph::boundary(const NodeSet& s) const {
  std::vector<EdgeId> cut_edges;
  for (EdgeId e : incident_edge_union(s)) {
    std::size_t inside = intersection_size(edge(e), s);
    if (inside > 0 && inside < edge_size(e)) cut_edges.push_back(e);
  }
  return cut_edges;
}

NodeSet Hypergraph::neighborhood(const NodeSet& s) const {
  std::vector<NodeId> nodes;
  for (EdgeId e : incident_edge_union(s)) {
    auto pins = edge(e);
    nodes.insert(nodes.end(), pins.begin(), pins.end());
  }
  return NodeSet(std::move(nodes));
}

double Hypergraph::conductance(const NodeSet& s) const {
  double vol = volume(s);
  double denom = std::min(vol, total_volume_ - vol);
  if (!(denom > 0.0)) return kInfinity;
  return cut(s) / denom;
}

double Hypergraph::normalized_cut(const NodeSet& s) const {
  double vol = volume(s);
  double co_vol = total_volume_ - vol;
  if (!(vol > 0.0) || !(co_vol > 0.0)) return kInfinity;
  double c = cut(s);
  return c / vol + c / co_vol;
}

double Hypergraph::overlap_score(const NodeSet& r, double eps, const NodeSet& s) const {
  if (eps < 0.0) throw InputError("overlap score: eps must be non-negative");
  double score = 0.0;
  for (NodeId v : s) {
    score += r.contains(v) ? degree(v) : -eps * degree(v);
  }
  return score;
}

double Hypergraph::hlc(const NodeSet& r, double eps, const NodeSet& s) const {
  if (eps < 0.0) throw InputError("overlap score: eps must be non-negative");
  double pos = 0.0;
  double neg = 0.0;
  for (NodeId v : s) {
    if (r.contains(v)) pos += degree(v);
    else neg += eps * degree(v);
  }
  double score = pos - neg;
  if (!(score > kOverlapRelTol * (pos + neg))) return kInfinity;
  return cut(s) / score;
}

void Hypergraph::check_consistency() const {
  const EdgeId m = num_edges();
  if (edge_ptr_.back() != pins_.size() || split_ptr_.back() != split_val_.size()) {
    throw StateError("hypergraph: CSR pointers out of sync");
  }
  if (edge_weight_.size() != m) throw StateError("hypergraph: weight array out of sync");
  for (EdgeId e = 0; e < m; ++e) {
    auto pins = edge(e);
    if (pins.size() < 2) throw StateError("hypergraph: degenerate edge kept");
    if (!std::is_sorted(pins.begin(), pins.end()) ||
        std::adjacent_find(pins.begin(), pins.end()) != pins.end()) {
      throw StateError("hypergraph: edge pins not sorted unique");
    }
    if (pins.back() >= n_) throw StateError("hypergraph: pin out of range");
    if (split_ptr_[e + 1] - split_ptr_[e] != pins.size() / 2 + 1) {
      throw StateError("hypergraph: splitting table length mismatch");
    }
    if (split_val_[split_ptr_[e]] != 0.0) {
      throw StateError("hypergraph: splitting table must start at 0");
    }
  }
  std::vector<double> deg(n_, 0.0);
  std::size_t pin_count = 0;
  for (EdgeId e = 0; e < m; ++e) {
    for (NodeId v : edge(e)) {
      deg[v] += split_val_[split_ptr_[e] + 1];
      ++pin_count;
      auto inc = incident_edges(v);
      if (!std::binary_search(inc.begin(), inc.end(), e)) {
        throw StateError("hypergraph: incidence missing an edge");
      }
    }
  }
  if (pin_count != incident_.size()) throw StateError("hypergraph: incidence size mismatch");
  double vol = 0.0;
  for (NodeId v = 0; v < n_; ++v) {
    if (!approx_eq(deg[v], degree_[v])) throw StateError("hypergraph: degree cache stale");
    vol += degree_[v];
  }
  if (!approx_eq(vol, total_volume_)) throw StateError("hypergraph: volume cache stale");
}

}  // namespace hyperlocal
