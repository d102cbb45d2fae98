#include "hyperlocal/local_solver.hpp"

#include <algorithm>

#include "hyperlocal/reduction.hpp"

namespace hyperlocal {

LocalHypergraph::LocalHypergraph(const Hypergraph& h, const NodeSet& r)
    : h_(h), nodes_(r.unite(h.neighborhood(r))), edges_(h.incident_edge_union(r)) {}

void LocalHypergraph::grow(const NodeSet& fresh) {
  if (fresh.empty()) return;
  explored_ = explored_.unite(fresh);
  nodes_ = nodes_.unite(h_.neighborhood(fresh));
  std::vector<EdgeId> added = h_.incident_edge_union(fresh);
  std::vector<EdgeId> merged;
  merged.reserve(edges_.size() + added.size());
  std::set_union(edges_.begin(), edges_.end(), added.begin(), added.end(),
                 std::back_inserter(merged));
  edges_ = std::move(merged);
}

LocalSolveResult solve_strongly_local(const Hypergraph& h, const NodeSet& r, double eps,
                                      double alpha, const NodeSet& seeds) {
  if (r.empty()) throw InputError("local solve: reference set is empty");
  if (!(eps > 0.0)) throw InputError("local solve: eps must be positive");
  if (!(alpha > 0.0)) throw InputError("local solve: alpha must be positive");
  if (!seeds.is_subset_of(r)) {
    throw InputError("local solve: seeds must lie inside the reference set");
  }

  std::vector<NodeId> active;
  for (NodeId v : r) {
    if (!h.incident_edges(v).empty()) active.push_back(v);
  }
  LocalSolveResult result;
  result.stats.isolated_reference_nodes_removed = r.size() - active.size();
  NodeSet r_eff(std::move(active));
  if (r_eff.empty()) throw InputError("local solve: every reference node is isolated");
  NodeSet seeds_eff = seeds.intersect(r_eff);

  result.stats.vol_r = h.volume(r_eff);
  result.stats.eps = eps;
  result.stats.terminal_degree_cap = std::max<std::size_t>(h.max_edge_size(), 2);

  LocalHypergraph local(h, r_eff);
  for (;;) {
    StCutInstance inst(h, local.nodes(),
                       std::vector<EdgeId>(local.edges().begin(), local.edges().end()),
                       r_eff, eps, alpha, seeds_eff);
    double value = inst.solve();
    NodeSet cut_side = inst.source_side_nodes();
    NodeSet fresh = cut_side.difference(r_eff).difference(local.explored());

    RoundStats round;
    round.local_nodes = local.nodes().size();
    round.local_edges = local.edges().size();
    round.newly_explored = fresh.size();
    round.explored = local.explored().size() + fresh.size();
    round.flow_value = value;
    result.stats.rounds.push_back(round);

    if (fresh.empty()) {
      result.cut_set = std::move(cut_side);
      result.cut_value = value;
      break;
    }
    local.grow(fresh);
  }

  result.stats.final_local_nodes = local.nodes().size();
  result.stats.final_local_edges = local.edges().size();
  result.stats.explored_volume = h.volume(local.explored());
  return result;
}

LocalityBounds locality_bounds(const SolveStats& stats) {
  LocalityBounds b;
  double expand = 1.0 + 1.0 / stats.eps;
  b.edge_bound = 1.5 * expand * stats.vol_r;
  b.node_bound = static_cast<double>(stats.terminal_degree_cap) * stats.vol_r * expand;
  b.explored_volume_bound = stats.vol_r / stats.eps;
  auto within = [](double value, double bound) {
    return value <= bound + 1e-9 * std::max(1.0, bound);
  };
  b.respected = within(static_cast<double>(stats.final_local_edges), b.edge_bound) &&
                within(static_cast<double>(stats.final_local_nodes), b.node_bound) &&
                within(stats.explored_volume, b.explored_volume_bound);
  return b;
}

bool has_unit_minimum_penalty(const Hypergraph& h) {
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    CardinalitySplitting split = h.splitting(e);
    for (double v : split.table()) {
      if (v > 0.0 && v < 1.0 - 1e-12) return false;
    }
  }
  return true;
}

}  // namespace hyperlocal
