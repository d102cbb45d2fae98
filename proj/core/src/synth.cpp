#include "hyperlocal/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

namespace hyperlocal {

namespace {

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t region) {
  return std::mt19937_64(seed ^ (0x9e3779b97f4a7c15ull * (region + 1)));
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Floyd's distinct sampling of `count` ids from [lo, hi).
std::vector<NodeId> sample_distinct(std::mt19937_64& rng, NodeId lo, NodeId hi,
                                    std::size_t count) {
  if (count > hi - lo) throw StateError("synth: sample larger than the region");
  std::unordered_set<NodeId> chosen;
  std::vector<NodeId> out;
  out.reserve(count);
  for (NodeId j = static_cast<NodeId>(hi - count); j < hi; ++j) {
    NodeId t = static_cast<NodeId>(uniform(rng, lo, j));
    if (chosen.insert(t).second) {
      out.push_back(t);
    } else {
      chosen.insert(j);
      out.push_back(j);
    }
  }
  return out;
}

// Shuffles [lo, hi) and chains it into edges of roughly the requested size;
// a leftover single node is absorbed into the final edge.
void coverage_pass(std::mt19937_64& rng, NodeId lo, NodeId hi, std::size_t emin,
                   std::size_t emax, std::vector<std::vector<NodeId>>& edges) {
  std::size_t size = hi - lo;
  if (size < 2) return;
  std::vector<NodeId> order(size);
  for (std::size_t i = 0; i < size; ++i) order[i] = static_cast<NodeId>(lo + i);
  std::shuffle(order.begin(), order.end(), rng);
  std::size_t idx = 0;
  while (idx < size) {
    std::size_t remaining = size - idx;
    std::size_t u = std::min(uniform(rng, emin, emax), remaining);
    if (remaining - u == 1) u = remaining;
    u = std::max<std::size_t>(u, 2);
    edges.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(idx),
                       order.begin() + static_cast<std::ptrdiff_t>(idx + u));
    idx += u;
  }
}

struct Region {
  NodeId lo, hi;
  std::size_t size() const { return hi - lo; }
};

}  // namespace

LabeledDataset synth_planted(const SynthParams& p, const SplittingSpec& spec) {
  if (p.n_clusters == 0) throw InputError("synth: need at least one cluster");
  if (p.cluster_size_min < 2 || p.cluster_size_max < p.cluster_size_min) {
    throw InputError("synth: cluster sizes must satisfy 2 <= min <= max");
  }
  if (p.edge_size_min < 2 || p.edge_size_max < p.edge_size_min) {
    throw InputError("synth: edge sizes must satisfy 2 <= min <= max");
  }

  // cluster sizes come first from each cluster's own stream, so a cluster's
  // layout is a function of (seed, index) alone
  std::vector<Region> clusters;
  NodeId offset = 0;
  for (std::size_t c = 0; c < p.n_clusters; ++c) {
    auto rng = stream(p.seed, 0x100 + c);
    std::size_t size = uniform(rng, p.cluster_size_min, p.cluster_size_max);
    clusters.push_back(Region{offset, static_cast<NodeId>(offset + size)});
    offset = clusters.back().hi;
  }
  if (offset > p.n_nodes) {
    throw InputError("synth: clusters need " + std::to_string(offset) +
                     " nodes, only " + std::to_string(p.n_nodes) + " available");
  }
  Region background{offset, p.n_nodes};

  std::vector<std::vector<NodeId>> edges;

  for (std::size_t c = 0; c < p.n_clusters; ++c) {
    auto rng = stream(p.seed, 0x100 + c);
    uniform(rng, p.cluster_size_min, p.cluster_size_max);  // consume the size draw
    const Region& reg = clusters[c];
    for (std::size_t pass = 0; pass < p.coverage_passes; ++pass) {
      coverage_pass(rng, reg.lo, reg.hi, p.edge_size_min, p.edge_size_max, edges);
    }
    auto m = static_cast<std::size_t>(
        std::lround(p.intra_edges_per_node * static_cast<double>(reg.size())));
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t u = std::min(uniform(rng, p.edge_size_min, p.edge_size_max), reg.size());
      if (u < 2) break;
      edges.push_back(sample_distinct(rng, reg.lo, reg.hi, u));
    }
  }

  {
    auto rng = stream(p.seed, 1);
    for (std::size_t pass = 0; pass < p.coverage_passes; ++pass) {
      coverage_pass(rng, background.lo, background.hi, p.edge_size_min, p.edge_size_max,
                    edges);
    }
  }

  {
    std::vector<Region> regions = clusters;
    if (background.size() >= 1) regions.push_back(background);
    auto rng = stream(p.seed, 2);
    auto m = static_cast<std::size_t>(
        std::lround(p.cross_fraction * static_cast<double>(p.n_nodes)));
    if (regions.size() >= 2) {
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t a = uniform(rng, 0, regions.size() - 1);
        std::size_t b = uniform(rng, 0, regions.size() - 2);
        if (b >= a) ++b;
        std::size_t u = uniform(rng, p.edge_size_min, p.edge_size_max);
        std::size_t ua = std::min(std::max<std::size_t>(u / 2, 1), regions[a].size());
        std::size_t ub = std::min(std::max<std::size_t>(u - u / 2, 1), regions[b].size());
        std::vector<NodeId> pins = sample_distinct(rng, regions[a].lo, regions[a].hi, ua);
        std::vector<NodeId> more = sample_distinct(rng, regions[b].lo, regions[b].hi, ub);
        pins.insert(pins.end(), more.begin(), more.end());
        if (pins.size() >= 2) edges.push_back(std::move(pins));
      }
    }
  }

  if (p.noise_edges > 0) {
    if (p.noise_edge_size < 2) throw InputError("synth: noise edges need size >= 2");
    auto rng = stream(p.seed, 3);
    for (std::size_t i = 0; i < p.noise_edges; ++i) {
      const Region& reg = clusters[uniform(rng, 0, p.n_clusters - 1)];
      std::size_t inside = std::min(p.noise_pins_in_cluster, reg.size());
      std::vector<NodeId> pins = sample_distinct(rng, reg.lo, reg.hi, inside);
      std::size_t rest = p.noise_edge_size > inside ? p.noise_edge_size - inside : 0;
      rest = std::min(rest, static_cast<std::size_t>(background.size()));
      if (rest > 0) {
        std::vector<NodeId> more = sample_distinct(rng, background.lo, background.hi, rest);
        pins.insert(pins.end(), more.begin(), more.end());
      }
      if (pins.size() >= 2) edges.push_back(std::move(pins));
    }
  }

  LabeledDataset ds;
  for (NodeId v = 0; v < p.n_nodes; ++v) {
    ds.ids.intern("n" + std::to_string(v));
  }
  std::vector<double> weights(edges.size(), 1.0);
  ds.hypergraph = Hypergraph(p.n_nodes, edges, weights, spec);
  for (std::size_t c = 0; c < p.n_clusters; ++c) {
    char name[32];
    std::snprintf(name, sizeof(name), "c%03zu", c);
    std::vector<NodeId> members(clusters[c].size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      members[i] = static_cast<NodeId>(clusters[c].lo + i);
    }
    ds.labels.emplace(name, NodeSet(std::move(members)));
  }
  return ds;
}

}  // namespace hyperlocal
