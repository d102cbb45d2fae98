#pragma once

#include <string>
#include <vector>

#include "hyperlocal/hyperlocal.hpp"
#include "hyperlocal/hypergraph.hpp"
#include "hyperlocal/nodeset.hpp"

namespace hyperlocal {

// Hypothesis measurements for the recovery guarantees, taken against a known
// target cluster T and the reference set R the solver was given.
//
// eps0 is vol(R)/vol(complement of R), the smallest eps with guarantees, and
// mu = eps - eps0. gamma and beta quantify how much of T's volume the
// reference set covers:
//   vol(T n R)/vol(T) = vol(R)/vol(V) + gamma * vol(R̄)/vol(V)
//   beta = vol(T n R)/vol(T) - vol(T̄ n R)/vol(T̄)
// g is vol(R̄) * vol(T n R) - vol(R) * vol(T n R̄), positive exactly when T
// overlaps R more than a volume-proportional random set would.
struct GuaranteeInput {
  double vol_t = 0.0;
  double vol_r = 0.0;
  double vol_total = 0.0;
  double cond_t = kInfinity;
  double ncut_t = kInfinity;
  double eps = 0.0;
  double eps0 = 0.0;
  double mu = 0.0;
  double gamma = 0.0;
  double beta = 0.0;
  double g = 0.0;
  bool t_subset_of_r = false;

  static GuaranteeInput measure(const Hypergraph& h, const NodeSet& target,
                                const NodeSet& r, double eps);
};

struct GuaranteeCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;  // meaningful only when applicable
  double bound = kInfinity;
  double actual = 0.0;
  double slack = 0.0;  // bound - actual
  std::string note;
};

struct GuaranteeReport {
  GuaranteeInput input;
  std::vector<GuaranteeCheck> checks;
};

// Compares the returned cluster against every guarantee whose hypotheses the
// instance satisfies; inapplicable ones are reported as skipped, never as
// failures. Anchored seeds void inner-solve optimality, so everything is
// skipped in that case.
GuaranteeReport check_guarantees(const Hypergraph& h, const ClusterReport& report,
                                 const NodeSet& target, const NodeSet& r, double eps);

}  // namespace hyperlocal
