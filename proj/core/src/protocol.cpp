#include "hyperlocal/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "hyperlocal/baselines.hpp"

namespace hyperlocal {

SeedGrowResult grow_reference(const Hypergraph& h, const NodeSet& target,
                              double seed_fraction, double grow_factor,
                              std::mt19937_64& rng) {
  if (target.empty()) throw InputError("grow reference: target cluster is empty");
  if (!(seed_fraction > 0.0) || seed_fraction > 1.0) {
    throw InputError("grow reference: seed fraction must be in (0, 1]");
  }
  if (!(grow_factor >= 1.0)) throw InputError("grow reference: grow factor must be >= 1");

  auto want_seeds = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::lround(seed_fraction * static_cast<double>(target.size()))));
  std::vector<NodeId> drawn;
  drawn.reserve(want_seeds);
  std::sample(target.begin(), target.end(), std::back_inserter(drawn), want_seeds, rng);
  SeedGrowResult out;
  out.seeds = NodeSet(std::move(drawn));

  auto want_total = static_cast<std::size_t>(
      std::lround(grow_factor * static_cast<double>(target.size())));
  std::size_t extra =
      want_total > out.seeds.size() ? want_total - out.seeds.size() : 0;
  out.reference = out.seeds.unite(NodeSet(best_neighbors(h, out.seeds, extra)));
  return out;
}

F1Score f1_score(const NodeSet& found, const NodeSet& target) {
  if (target.empty()) throw InputError("f1: target cluster is empty");
  F1Score score;
  if (found.empty()) return score;
  double tp = static_cast<double>(found.intersect(target).size());
  score.precision = tp / static_cast<double>(found.size());
  score.recall = tp / static_cast<double>(target.size());
  if (score.precision + score.recall > 0.0) {
    score.f1 = 2.0 * score.precision * score.recall / (score.precision + score.recall);
  }
  return score;
}

std::vector<RecoveryOutcome> recover_cluster(const Hypergraph& h, const NodeSet& target,
                                             const RecoveryParams& params) {
  if (params.trials == 0) throw InputError("recovery: need at least one trial");
  RecoveryOutcome hl{"hyperlocal", 0.0, {}};
  RecoveryOutcome bn{"best_neighbors", 0.0, {}};
  RecoveryOutcome tn{"top_neighbors", 0.0, {}};

  for (std::size_t t = 0; t < params.trials; ++t) {
    std::mt19937_64 rng(params.rng_seed + 0x51ed270b * static_cast<std::uint64_t>(t));
    SeedGrowResult grown = grow_reference(h, target, params.seed_fraction,
                                          params.grow_factor, rng);

    ClusterReport report = minimize_hlc(h, grown.reference, params.eps,
                                        params.anchor_seeds ? grown.seeds : NodeSet{});
    hl.trial_f1.push_back(f1_score(report.best_set, target).f1);

    // baselines get the true size: seeds plus ranked fill up to |target|
    std::size_t fill = target.size() > grown.seeds.size()
                           ? target.size() - grown.seeds.size()
                           : 0;
    NodeSet bn_found =
        grown.seeds.unite(NodeSet(best_neighbors(h, grown.seeds, fill)));
    NodeSet tn_found =
        grown.seeds.unite(NodeSet(top_neighbors(h, grown.seeds, fill)));
    bn.trial_f1.push_back(f1_score(bn_found, target).f1);
    tn.trial_f1.push_back(f1_score(tn_found, target).f1);
  }

  for (RecoveryOutcome* o : {&hl, &bn, &tn}) {
    double sum = 0.0;
    for (double f : o->trial_f1) sum += f;
    o->mean_f1 = sum / static_cast<double>(o->trial_f1.size());
  }
  return {hl, bn, tn};
}

std::vector<SweepRow> delta_sweep(const Hypergraph& h, const NodeSet& target,
                                  std::vector<double> deltas,
                                  const RecoveryParams& params) {
  if (deltas.empty()) throw InputError("delta sweep: no deltas given");
  std::sort(deltas.begin(), deltas.end());
  std::vector<SweepRow> rows;
  rows.reserve(deltas.size());
  for (double delta : deltas) {
    if (!(delta >= 1.0)) throw InputError("delta sweep: delta must be at least 1");
    SplittingSpec spec{SplittingSpec::Family::kDeltaLinear, delta, 1.0};
    Hypergraph graph = h.with_splitting(spec);
    // identical rng_seed per delta: every delta sees the same seed draws
    auto outcomes = recover_cluster(graph, target, params);
    rows.push_back(SweepRow{delta, outcomes.front().mean_f1});
  }
  return rows;
}

}  // namespace hyperlocal
