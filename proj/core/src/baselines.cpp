#include "hyperlocal/baselines.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

namespace hyperlocal {

namespace {

// candidate -> count of distinct seed-incident edges containing it
std::vector<std::pair<NodeId, std::size_t>> seed_edge_counts(const Hypergraph& h,
                                                             const NodeSet& seeds) {
  std::vector<EdgeId> seed_edges = h.incident_edge_union(seeds);
  std::vector<NodeId> cands;
  for (EdgeId e : seed_edges) {
    for (NodeId v : h.edge(e)) {
      if (!seeds.contains(v)) cands.push_back(v);
    }
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<std::pair<NodeId, std::size_t>> tally;
  tally.reserve(cands.size());
  for (NodeId v : cands) tally.emplace_back(v, 0);
  for (EdgeId e : seed_edges) {
    for (NodeId v : h.edge(e)) {
      if (seeds.contains(v)) continue;
      auto it = std::lower_bound(tally.begin(), tally.end(),
                                 std::make_pair(v, std::size_t{0}));
      ++it->second;
    }
  }
  return tally;
}

}  // namespace

std::vector<NodeId> top_neighbors(const Hypergraph& h, const NodeSet& seeds,
                                  std::size_t k) {
  if (seeds.empty()) throw InputError("top neighbors: seed set is empty");
  auto tally = seed_edge_counts(h, seeds);
  std::stable_sort(tally.begin(), tally.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<NodeId> ranked;
  ranked.reserve(std::min(k, tally.size()));
  for (std::size_t i = 0; i < tally.size() && i < k; ++i) ranked.push_back(tally[i].first);
  return ranked;
}

std::vector<NodeId> best_neighbors(const Hypergraph& h, const NodeSet& seeds,
                                   std::size_t k) {
  if (seeds.empty()) throw InputError("best neighbors: seed set is empty");
  auto tally = seed_edge_counts(h, seeds);
  // score v = |E(v) n E(seeds)| / |E(v)|; compare a / b vs c / d as a*d vs c*b
  std::stable_sort(tally.begin(), tally.end(), [&](const auto& a, const auto& b) {
    std::uint64_t lhs = static_cast<std::uint64_t>(a.second) * h.incident_edges(b.first).size();
    std::uint64_t rhs = static_cast<std::uint64_t>(b.second) * h.incident_edges(a.first).size();
    if (lhs != rhs) return lhs > rhs;
    return a.first < b.first;
  });
  std::vector<NodeId> ranked;
  ranked.reserve(std::min(k, tally.size()));
  for (std::size_t i = 0; i < tally.size() && i < k; ++i) ranked.push_back(tally[i].first);
  return ranked;
}

CliqueExpansion clique_expand(const Hypergraph& h, bool weighted, std::size_t max_size) {
  std::map<std::pair<NodeId, NodeId>, double> pairs;
  std::size_t discarded = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto pins = h.edge(e);
    if (pins.size() >= max_size) {
      ++discarded;
      continue;
    }
    double w = weighted ? h.edge_weight(e) / static_cast<double>(pins.size()) : 1.0;
    for (std::size_t i = 0; i < pins.size(); ++i) {
      for (std::size_t j = i + 1; j < pins.size(); ++j) {
        pairs[{pins[i], pins[j]}] += w;
      }
    }
  }
  std::vector<std::vector<NodeId>> edges;
  std::vector<double> weights;
  edges.reserve(pairs.size());
  weights.reserve(pairs.size());
  for (const auto& [pair, w] : pairs) {
    edges.push_back({pair.first, pair.second});
    weights.push_back(w);
  }
  // pair weights go in as edge weights, not only penalty tables, so that
  // saving the expansion preserves them
  CliqueExpansion out{
      Hypergraph(h.num_nodes(), edges, weights, SplittingSpec::parse("aon:1")), discarded};
  return out;
}

ClusterReport flowseed_equivalent(const Hypergraph& g, const NodeSet& r, double eps,
                                  const NodeSet& seeds, const MinimizeOptions& options) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.edge_size(e) != 2) {
      throw InputError("graph clustering: edge " + std::to_string(e) +
                       " has " + std::to_string(g.edge_size(e)) +
                       " pins; the input must be 2-uniform");
    }
  }
  return minimize_hlc(g, r, eps, seeds, options);
}

}  // namespace hyperlocal
