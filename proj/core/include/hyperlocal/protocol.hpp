#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperlocal/hyperlocal.hpp"
#include "hyperlocal/io.hpp"

namespace hyperlocal {

// Seed-and-grow protocol for recovering a target cluster: sample a fraction
// of it, then pad the reference set with ranked neighbors until it reaches
// grow_factor times the target size.
struct SeedGrowResult {
  NodeSet seeds;
  NodeSet reference;
};

SeedGrowResult grow_reference(const Hypergraph& h, const NodeSet& target,
                              double seed_fraction, double grow_factor,
                              std::mt19937_64& rng);

struct F1Score {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

F1Score f1_score(const NodeSet& found, const NodeSet& target);

struct RecoveryParams {
  double seed_fraction = 0.05;
  double grow_factor = 2.0;
  double eps = 1.0;
  bool anchor_seeds = true;
  std::size_t trials = 1;
  std::uint64_t rng_seed = 1;
};

struct RecoveryOutcome {
  std::string method;
  double mean_f1 = 0.0;
  std::vector<double> trial_f1;
};

// Runs the localized clustering and both neighbor-ranking baselines over the
// same sampled seeds; baselines are handed the target size. Baseline result
// sets are seeds plus their ranked nodes.
std::vector<RecoveryOutcome> recover_cluster(const Hypergraph& h, const NodeSet& target,
                                             const RecoveryParams& params);

struct SweepRow {
  double delta = 0.0;
  double mean_f1 = 0.0;
};

// Re-runs recovery under delta-linear splittings for each delta, identical
// seed draws across deltas. Rows come back sorted by delta.
std::vector<SweepRow> delta_sweep(const Hypergraph& h, const NodeSet& target,
                                  std::vector<double> deltas,
                                  const RecoveryParams& params);

}  // namespace hyperlocal
