#include "hyperlocal/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace hyperlocal {

namespace {

using Mask = std::uint32_t;

struct EnumeratedGraph {
  NodeId n;
  std::vector<Mask> edge_masks;
  std::vector<double> degrees;
  const Hypergraph* h;

  explicit EnumeratedGraph(const Hypergraph& graph) : h(&graph) {
    n = graph.num_nodes();
    if (n > kOracleMaxNodes) {
      throw InputError("oracle: instance has " + std::to_string(n) +
                       " nodes, enumeration is capped at " +
                       std::to_string(kOracleMaxNodes));
    }
    edge_masks.reserve(graph.num_edges());
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
      Mask m = 0;
      for (NodeId v : graph.edge(e)) m |= Mask{1} << v;
      edge_masks.push_back(m);
    }
    degrees.resize(n);
    for (NodeId v = 0; v < n; ++v) degrees[v] = graph.degree(v);
  }

  double cut(Mask s) const {
    double total = 0.0;
    for (EdgeId e = 0; e < edge_masks.size(); ++e) {
      total += h->split_penalty(e, std::popcount(s & edge_masks[e]));
    }
    return total;
  }

  double volume(Mask s) const {
    double total = 0.0;
    while (s) {
      NodeId v = static_cast<NodeId>(std::countr_zero(s));
      total += degrees[v];
      s &= s - 1;
    }
    return total;
  }

  static Mask to_mask(const NodeSet& s) {
    Mask m = 0;
    for (NodeId v : s) m |= Mask{1} << v;
    return m;
  }

  static NodeSet to_set(Mask s) {
    std::vector<NodeId> members;
    while (s) {
      members.push_back(static_cast<NodeId>(std::countr_zero(s)));
      s &= s - 1;
    }
    return NodeSet(std::move(members));
  }
};

}  // namespace

OracleResult brute_min_hlc(const Hypergraph& h, const NodeSet& r, double eps) {
  if (r.empty()) throw InputError("oracle: reference set is empty");
  if (eps < 0.0) throw InputError("oracle: eps must be non-negative");
  EnumeratedGraph g(h);
  Mask r_mask = EnumeratedGraph::to_mask(r);
  const Mask full = g.n == 32 ? ~Mask{0} : (Mask{1} << g.n) - 1;

  OracleResult best;
  bool found = false;
  for (Mask s = 1; s <= full; ++s) {
    double pos = g.volume(s & r_mask);
    double neg = eps * g.volume(s & ~r_mask);
    double score = pos - neg;
    if (!(score > kOverlapRelTol * (pos + neg))) continue;
    double value = g.cut(s) / score;
    if (!found || value < best.value) {
      found = true;
      best.value = value;
      best.witness = EnumeratedGraph::to_set(s);
    }
  }
  if (!found) {
    throw InputError("oracle: no set has positive overlap score; the reference "
                     "set carries no volume at this eps");
  }
  return best;
}

OracleResult brute_min_st_cut(const Hypergraph& h, const NodeSet& r, double eps,
                              double alpha) {
  return brute_min_st_cut(h, r, eps, alpha, NodeSet{});
}

OracleResult brute_min_st_cut(const Hypergraph& h, const NodeSet& r, double eps,
                              double alpha, const NodeSet& seeds) {
  if (!(alpha > 0.0)) throw InputError("oracle: alpha must be positive");
  if (eps < 0.0) throw InputError("oracle: eps must be non-negative");
  if (!seeds.is_subset_of(r)) throw InputError("oracle: seeds must lie inside r");
  EnumeratedGraph g(h);
  Mask r_mask = EnumeratedGraph::to_mask(r);
  Mask seed_mask = EnumeratedGraph::to_mask(seeds);
  const Mask full = g.n == 32 ? ~Mask{0} : (Mask{1} << g.n) - 1;
  const double vol_r = g.volume(r_mask);

  OracleResult best;
  bool found = false;
  for (Mask s = 0; ; ++s) {
    if ((s & seed_mask) == seed_mask) {
      double value = g.cut(s) + alpha * (vol_r - g.volume(s & r_mask)) +
                     alpha * eps * g.volume(s & ~r_mask);
      if (!found || value < best.value) {
        found = true;
        best.value = value;
        best.witness = EnumeratedGraph::to_set(s);
      }
    }
    if (s == full) break;
  }
  return best;
}

OracleResult brute_min_conductance(const Hypergraph& h) {
  EnumeratedGraph g(h);
  if (g.n < 2) throw InputError("oracle: conductance needs at least two nodes");
  const Mask full = g.n == 32 ? ~Mask{0} : (Mask{1} << g.n) - 1;

  OracleResult best;
  bool found = false;
  for (Mask s = 1; s < full; ++s) {
    double vol = g.volume(s);
    double denom = std::min(vol, g.volume(full & ~s));
    double value = denom > 0.0 ? g.cut(s) / denom : kInfinity;
    if (!found || value < best.value) {
      found = true;
      best.value = value;
      best.witness = EnumeratedGraph::to_set(s);
    }
  }
  return best;
}

}  // namespace hyperlocal
