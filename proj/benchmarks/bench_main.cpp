// Microbenchmarks: raw push-relabel throughput on layered networks, and the
// localized clustering routine against a ground-up global cut build at the
// same objective value, across ambient sizes. Run with --benchmark_filter to
// select a group.

#include <cstdint>
#include <map>
#include <random>
#include <utility>

#include <benchmark/benchmark.h>

#include "hyperlocal/hyperlocal.hpp"
#include "hyperlocal/io.hpp"
#include "hyperlocal/maxflow.hpp"
#include "hyperlocal/reduction.hpp"
#include "hyperlocal/synth.hpp"

namespace {

using namespace hyperlocal;

// Layered random network: source, kLayers bands of equal width, sink. Arcs
// join consecutive bands with random capacities, so flow must thread the
// full depth of the network.
FlowNetwork layered_network(NodeId width, NodeId* s_out, NodeId* t_out) {
  constexpr int kLayers = 8;
  constexpr int kFanOut = 6;
  std::mt19937_64 rng(width * 2654435761u + 13);
  std::uniform_real_distribution<double> cap(1.0, 16.0);

  FlowNetwork net;
  NodeId s = net.add_node();
  NodeId t = net.add_node();
  NodeId first = net.add_nodes(static_cast<std::size_t>(width) * kLayers);
  auto node = [&](int layer, NodeId i) { return first + layer * width + i; };

  for (NodeId i = 0; i < width; ++i) {
    net.add_arc(s, node(0, i), cap(rng));
    net.add_arc(node(kLayers - 1, i), t, cap(rng));
  }
  std::uniform_int_distribution<NodeId> pick(0, width - 1);
  for (int layer = 0; layer + 1 < kLayers; ++layer) {
    for (NodeId i = 0; i < width; ++i) {
      for (int k = 0; k < kFanOut; ++k) {
        net.add_arc(node(layer, i), node(layer + 1, pick(rng)), cap(rng));
      }
    }
  }
  *s_out = s;
  *t_out = t;
  return net;
}

void BM_MaxFlowLayered(benchmark::State& state) {
  NodeId s = 0;
  NodeId t = 0;
  FlowNetwork net = layered_network(static_cast<NodeId>(state.range(0)), &s, &t);
  double value = 0.0;
  for (auto _ : state) {
    value = net.max_flow(s, t);
    benchmark::DoNotOptimize(value);
  }
  state.counters["nodes"] = static_cast<double>(net.num_nodes());
  state.counters["arcs"] = static_cast<double>(net.num_arcs());
  state.counters["flow"] = value;
}
BENCHMARK(BM_MaxFlowLayered)->RangeMultiplier(4)->Range(64, 4096)
    ->Unit(benchmark::kMillisecond);

// Planted-cluster family with a fixed boundary: the cluster layout and the
// cross-edge count stay the same while the ambient bulk grows, so only the
// ambient size separates the entries.
struct ScalingInstance {
  LabeledDataset data;
  NodeSet reference;
  double alpha0 = 0.0;
};

const ScalingInstance& scaling_instance(std::int64_t n) {
  static std::map<std::int64_t, ScalingInstance> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  SynthParams params;
  params.n_nodes = static_cast<NodeId>(n);
  params.n_clusters = 20;
  params.cluster_size_min = 150;
  params.cluster_size_max = 250;
  params.edge_size_min = 2;
  params.edge_size_max = 5;
  params.intra_edges_per_node = 2.0;
  params.cross_fraction = 500.0 / static_cast<double>(n);
  params.seed = 97;

  ScalingInstance inst{synth_planted(params, SplittingSpec::parse("dlt:1")), {}, 0.0};
  const NodeSet& cluster = inst.data.label("c000");
  std::vector<NodeId> half(cluster.begin(), cluster.begin() + cluster.size() / 2);
  inst.reference = NodeSet(std::move(half));
  inst.alpha0 = inst.data.hypergraph.hlc(inst.reference, 1.0, inst.reference);
  return cache.emplace(n, std::move(inst)).first->second;
}

void BM_LocalCluster(benchmark::State& state) {
  const ScalingInstance& inst = scaling_instance(state.range(0));
  for (auto _ : state) {
    ClusterReport report = minimize_hlc(inst.data.hypergraph, inst.reference, 1.0);
    benchmark::DoNotOptimize(report.objective);
  }
}
BENCHMARK(BM_LocalCluster)->RangeMultiplier(10)->Range(10000, 1000000)
    ->Unit(benchmark::kMillisecond);

void BM_GlobalCut(benchmark::State& state) {
  const ScalingInstance& inst = scaling_instance(state.range(0));
  for (auto _ : state) {
    StCutInstance cut = build_st_instance(inst.data.hypergraph, inst.reference, 1.0,
                                          inst.alpha0);
    benchmark::DoNotOptimize(cut.solve());
  }
}
BENCHMARK(BM_GlobalCut)->RangeMultiplier(10)->Range(10000, 1000000)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
