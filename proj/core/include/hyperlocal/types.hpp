#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace hyperlocal {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Sentinel for unbounded values (uncuttable s-t pairs, undefined ratios).
// Participates in comparisons only, never in arithmetic.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Malformed input: files, CLI parameters, arguments outside a routine's
// contract. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal contract: querying an unsolved network, inconsistent
// solver state. The CLI maps this to exit code 2.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Relative comparison used throughout: |a - b| <= rel * max(1, |a|, |b|).
bool approx_eq(double a, double b, double rel = 1e-9);

// An overlap score this close to zero (relative to the magnitudes that formed
// it) is treated as non-positive: dividing by rounding dust would admit the
// whole vertex set as an objective-zero cluster.
inline constexpr double kOverlapRelTol = 1e-12;

}  // namespace hyperlocal
