#include "hyperlocal/reduction.hpp"

#include <algorithm>
#include <string>

namespace hyperlocal {

StCutInstance::StCutInstance(const Hypergraph& h, const NodeSet& included_nodes,
                             std::vector<EdgeId> included_edges, const NodeSet& r,
                             double eps, double alpha, const NodeSet& seeds)
    : included_(included_nodes), edges_(std::move(included_edges)) {
  if (!(alpha > 0.0)) throw InputError("st-cut instance: alpha must be positive");
  if (!(eps > 0.0)) throw InputError("st-cut instance: eps must be positive");
  if (!seeds.is_subset_of(r)) {
    throw InputError("st-cut instance: seeds must lie inside the reference set");
  }
  if (!r.is_subset_of(included_)) {
    throw InputError("st-cut instance: reference set must be included");
  }

  net_.add_nodes(2 + included_.size() + 2 * edges_.size());

  for (std::size_t i = 0; i < included_.size(); ++i) {
    NodeId v = included_.members()[i];
    NodeId nv = static_cast<NodeId>(2 + i);
    double d = h.degree(v);
    if (r.contains(v)) {
      net_.add_arc(source(), nv, seeds.contains(v) ? kInfinity : alpha * d);
    } else {
      net_.add_arc(nv, sink(), alpha * eps * d);
    }
  }

  gadgets_.reserve(edges_.size());
  NodeId aux = static_cast<NodeId>(2 + included_.size());
  for (EdgeId e : edges_) {
    auto form = h.splitting(e).delta_linear_form();
    if (!form) {
      throw InputError("st-cut instance: splitting of edge " + std::to_string(e) +
                       " is not delta-linear; the flow gadget cannot encode it");
    }
    GadgetPair g{aux, static_cast<NodeId>(aux + 1)};
    aux += 2;
    net_.add_arc(g.entry, g.exit, form->scale * form->delta);
    for (NodeId v : h.edge(e)) {
      NodeId nv = network_node(v);
      net_.add_arc(nv, g.entry, form->scale);
      net_.add_arc(g.exit, nv, form->scale);
    }
    gadgets_.push_back(g);
  }
}

NodeId StCutInstance::network_node(NodeId hypergraph_node) const {
  const auto& m = included_.members();
  auto it = std::lower_bound(m.begin(), m.end(), hypergraph_node);
  if (it == m.end() || *it != hypergraph_node) {
    throw StateError("st-cut instance: node " + std::to_string(hypergraph_node) +
                     " is not part of the instance");
  }
  return static_cast<NodeId>(2 + (it - m.begin()));
}

double StCutInstance::solve() { return net_.max_flow(source(), sink()); }

NodeSet StCutInstance::source_side_nodes() const {
  NodeSet side = net_.min_cut_source_side();
  std::vector<NodeId> nodes;
  const NodeId lo = 2;
  const NodeId hi = static_cast<NodeId>(2 + included_.size());
  for (NodeId id : side) {
    if (id >= lo && id < hi) nodes.push_back(included_.members()[id - lo]);
  }
  return NodeSet(std::move(nodes));
}

StCutInstance build_st_instance(const Hypergraph& h, const NodeSet& r, double eps,
                                double alpha, const NodeSet& seeds) {
  std::vector<NodeId> all(h.num_nodes());
  for (NodeId v = 0; v < h.num_nodes(); ++v) all[v] = v;
  std::vector<EdgeId> edges(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) edges[e] = e;
  return StCutInstance(h, NodeSet(std::move(all)), std::move(edges), r, eps, alpha, seeds);
}

double st_cut_objective(const Hypergraph& h, const NodeSet& r, double eps, double alpha,
                        const NodeSet& s) {
  double vol_sr = 0.0, vol_sout = 0.0;
  for (NodeId v : s) {
    (r.contains(v) ? vol_sr : vol_sout) += h.degree(v);
  }
  return h.cut(s) + alpha * (h.volume(r) - vol_sr) + alpha * eps * vol_sout;
}

double st_cut_objective(const Hypergraph& h, std::span<const EdgeId> edges,
                        const NodeSet& r, double eps, double alpha, const NodeSet& s) {
  double vol_sr = 0.0, vol_sout = 0.0;
  for (NodeId v : s) {
    (r.contains(v) ? vol_sr : vol_sout) += h.degree(v);
  }
  return h.cut_over(edges, s) + alpha * (h.volume(r) - vol_sr) + alpha * eps * vol_sout;
}

}  // namespace hyperlocal
