#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperlocal/hypergraph.hpp"
#include "hyperlocal/local_solver.hpp"
#include "hyperlocal/nodeset.hpp"

namespace hyperlocal {

struct IterationStats {
  double alpha = 0.0;      // objective of the accepted iterate
  double cut = 0.0;
  double overlap = 0.0;    // Omega of the iterate
  std::size_t size = 0;
};

struct MinimizeOptions {
  double tol = 1e-8;                 // relative improvement needed to keep going
  std::size_t max_iterations = 64;   // inner solves; descent normally stops far earlier
};

struct ClusterReport {
  NodeSet best_set;
  double objective = kInfinity;      // ratio objective of best_set, recomputed
  std::size_t iterations = 0;        // inner min-cut solves performed
  bool converged = false;
  bool seeds_anchored = false;       // anchoring voids global optimality claims
  std::vector<IterationStats> trace; // accepted iterates, reference set first
  std::vector<SolveStats> solves;    // per inner solve, aligned with iterations
  std::vector<std::string> warnings;
};

// Ratio-cut descent: repeatedly solves the localized cut problem at the
// current objective value and accepts strictly improving sets. Terminates at
// the first non-improving solve, returning the best set seen.
ClusterReport minimize_hlc(const Hypergraph& h, const NodeSet& r, double eps,
                           const NodeSet& seeds = {},
                           const MinimizeOptions& options = {});

}  // namespace hyperlocal
