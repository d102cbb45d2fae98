#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace testsupport {

using hyperlocal::CardinalitySplitting;
using hyperlocal::kInfinity;

AugmentingPathFlow::AugmentingPathFlow(NodeId n) : n_(n), out_(n) {}

void AugmentingPathFlow::add_arc(NodeId from, NodeId to, double capacity) {
  out_[from].push_back(arcs_.size());
  arcs_.push_back(Arc{to, capacity, 0.0});
  out_[to].push_back(arcs_.size());
  arcs_.push_back(Arc{from, 0.0, 0.0});
}

double AugmentingPathFlow::residual(std::size_t a) const {
  return arcs_[a].cap - arcs_[a].flow;  // inf stays inf under IEEE rules
}

double AugmentingPathFlow::max_flow(NodeId s, NodeId t) {
  for (Arc& a : arcs_) a.flow = 0.0;
  double total = 0.0;
  for (;;) {
    std::vector<std::size_t> via(n_, static_cast<std::size_t>(-1));
    std::vector<char> seen(n_, 0);
    std::vector<NodeId> queue{s};
    seen[s] = 1;
    for (std::size_t qi = 0; qi < queue.size() && !seen[t]; ++qi) {
      NodeId u = queue[qi];
      for (std::size_t a : out_[u]) {
        if (residual(a) > 0.0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          via[arcs_[a].to] = a;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    if (!seen[t]) return total;
    double bottleneck = kInfinity;
    for (NodeId v = t; v != s; v = arcs_[via[v] ^ 1].to) {
      bottleneck = std::min(bottleneck, residual(via[v]));
    }
    if (std::isinf(bottleneck)) return kInfinity;
    for (NodeId v = t; v != s; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].flow += bottleneck;
      arcs_[via[v] ^ 1].flow -= bottleneck;
    }
    total += bottleneck;
  }
}

NodeSet AugmentingPathFlow::residual_reachable(NodeId s) const {
  std::vector<char> seen(n_, 0);
  std::vector<NodeId> queue{s};
  seen[s] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::size_t a : out_[queue[qi]]) {
      if (residual(a) > 0.0 && !seen[arcs_[a].to]) {
        seen[arcs_[a].to] = 1;
        queue.push_back(arcs_[a].to);
      }
    }
  }
  return NodeSet(std::move(queue));
}

Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomHypergraphParams& p) {
  std::vector<std::vector<NodeId>> edges;
  std::vector<CardinalitySplitting> splittings;
  std::uniform_int_distribution<std::size_t> size_pick(
      2, std::min<std::size_t>(p.kmax, p.n));
  std::uniform_int_distribution<NodeId> node_pick(0, p.n - 1);
  std::uniform_int_distribution<int> weight_pick(1, p.fractional_weights ? 12 : 3);
  for (std::size_t e = 0; e < p.m; ++e) {
    std::size_t k = size_pick(rng);
    std::vector<NodeId> pins;
    while (pins.size() < k) {
      NodeId v = node_pick(rng);
      if (std::find(pins.begin(), pins.end(), v) == pins.end()) pins.push_back(v);
    }
    double w = p.fractional_weights ? 0.25 * weight_pick(rng) : weight_pick(rng);
    std::uniform_int_distribution<std::size_t> delta_pick(1, p.max_delta);
    double delta = static_cast<double>(delta_pick(rng));
    edges.push_back(std::move(pins));
    splittings.push_back(CardinalitySplitting::delta_linear(k, delta, w));
  }
  return Hypergraph(p.n, edges, std::move(splittings));
}

Hypergraph random_graph(std::mt19937_64& rng, NodeId n, std::size_t m,
                        bool fractional_weights) {
  std::vector<std::vector<NodeId>> edges;
  std::vector<CardinalitySplitting> splittings;
  std::uniform_int_distribution<NodeId> node_pick(0, n - 1);
  std::uniform_int_distribution<int> weight_pick(1, fractional_weights ? 12 : 4);
  for (std::size_t e = 0; e < m; ++e) {
    NodeId u = node_pick(rng);
    NodeId v = node_pick(rng);
    while (v == u) v = node_pick(rng);
    double w = fractional_weights ? 0.25 * weight_pick(rng) : weight_pick(rng);
    edges.push_back({u, v});
    splittings.push_back(CardinalitySplitting::all_or_nothing(2, w));
  }
  return Hypergraph(n, edges, std::move(splittings));
}

NodeSet random_nonempty_subset(std::mt19937_64& rng, NodeId n) {
  std::vector<NodeId> members;
  std::uniform_int_distribution<int> coin(0, 1);
  for (NodeId v = 0; v < n; ++v) {
    if (coin(rng)) members.push_back(v);
  }
  if (members.empty()) {
    members.push_back(std::uniform_int_distribution<NodeId>(0, n - 1)(rng));
  }
  return NodeSet(std::move(members));
}

double gadget_cost_by_enumeration(std::size_t k, std::size_t side, double delta,
                                  double scale) {
  double best = std::numeric_limits<double>::infinity();
  for (int entry_at_sink = 0; entry_at_sink < 2; ++entry_at_sink) {
    for (int exit_at_sink = 0; exit_at_sink < 2; ++exit_at_sink) {
      double cost = 0.0;
      if (entry_at_sink) cost += scale * static_cast<double>(side);
      if (!entry_at_sink && exit_at_sink) cost += scale * delta;
      if (!exit_at_sink) cost += scale * static_cast<double>(k - side);
      best = std::min(best, cost);
    }
  }
  return best;
}

double graph_cut(const Hypergraph& g, const NodeSet& s) {
  double total = 0.0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto pins = g.edge(e);
    if (pins.size() != 2) throw std::logic_error("graph_cut needs a 2-uniform input");
    if (s.contains(pins[0]) != s.contains(pins[1])) total += g.split_penalty(e, 1);
  }
  return total;
}

double graph_hlc(const Hypergraph& g, const NodeSet& r, double eps, const NodeSet& s) {
  std::vector<double> degree(g.num_nodes(), 0.0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (NodeId v : g.edge(e)) degree[v] += g.split_penalty(e, 1);
  }
  double score = 0.0;
  for (NodeId v : s) {
    score += r.contains(v) ? degree[v] : -eps * degree[v];
  }
  if (!(score > 0.0)) return kInfinity;
  return graph_cut(g, s) / score;
}

}  // namespace testsupport
