#pragma once

#include "hyperlocal/hypergraph.hpp"
#include "hyperlocal/nodeset.hpp"

namespace hyperlocal {

// Exhaustive enumeration references. Every routine walks candidate subsets
// in ascending bitmask order and evaluates definitions directly, without the
// flow machinery, so results are usable as an independent check against it.
// Ties keep the first witness, making the witness deterministic.
inline constexpr NodeId kOracleMaxNodes = 20;

struct OracleResult {
  double value = kInfinity;
  NodeSet witness;
};

// Minimum of cut(S) / Omega(S) over nonempty S with positive Omega.
OracleResult brute_min_hlc(const Hypergraph& h, const NodeSet& r, double eps);

// Minimum of the localized cut objective over all S, the empty set included.
OracleResult brute_min_st_cut(const Hypergraph& h, const NodeSet& r, double eps,
                              double alpha);

// Same minimum restricted to S containing all seeds.
OracleResult brute_min_st_cut(const Hypergraph& h, const NodeSet& r, double eps,
                              double alpha, const NodeSet& seeds);

// Minimum conductance over nonempty proper subsets.
OracleResult brute_min_conductance(const Hypergraph& h);

}  // namespace hyperlocal
