#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlocal/types.hpp"

namespace hyperlocal {

// Parameters recovered from a penalty table of the shape scale * min(delta, i).
// Tables of this shape are exactly the ones the flow gadget can encode.
struct DeltaLinearForm {
  double delta = 0;
  double scale = 0;
};

// Cardinality-based splitting function for a hyperedge of size k. The table
// stores the penalty for each size of the smaller side of a bipartition, so
// w_e(A) = w_e(e \ A) and w_e(empty) = w_e(e) = 0 hold by construction.
class CardinalitySplitting {
 public:
  CardinalitySplitting() = default;

  // penalty scale * min(delta, |A|, |e \ A|); requires delta >= 1, scale > 0
  static CardinalitySplitting delta_linear(std::size_t k, double delta,
                                           double scale = 1.0);
  // penalty weight for every nontrivial bipartition
  static CardinalitySplitting all_or_nothing(std::size_t k, double weight);
  // penalty (weight / k) * |A| * |e \ A|, the clique-expansion analogue
  static CardinalitySplitting clique(std::size_t k, double weight);
  // explicit table of length floor(k / 2) + 1 with table[0] == 0, entries >= 0
  static CardinalitySplitting from_table(std::size_t k, std::vector<double> table);

  std::size_t edge_size() const { return k_; }
  // lvalue-only: the reference must not outlive the splitting it points into
  const std::vector<double>& table() const& { return table_; }
  const std::vector<double>& table() const&& = delete;

  // w_e(A) for |A| = side_size; valid for 0 <= side_size <= k
  double penalty(std::size_t side_size) const;

  // Structural match against scale * min(delta, i); an all-zero table reports
  // scale 0. Returns nullopt for tables the gadget cannot represent.
  std::optional<DeltaLinearForm> delta_linear_form() const;

  // Checks w(A) + w(B) >= w(A u B) + w(A n B). Exhaustive over subset pairs
  // for k <= 12; beyond that, samples cardinality classes (|A|, |B|, |A n B|)
  // with a fixed seed, so a false result is always a genuine witness.
  bool is_submodular() const;

  bool operator==(const CardinalitySplitting& other) const = default;

 private:
  CardinalitySplitting(std::size_t k, std::vector<double> table);

  std::size_t k_ = 0;
  std::vector<double> table_;
};

// Splitting family applied uniformly to a hypergraph, scaled per edge by the
// edge weight. Spelled "aon:w", "dlt:delta[:scale]" or "clique:w" on the
// command line.
struct SplittingSpec {
  enum class Family { kAllOrNothing, kDeltaLinear, kClique };

  Family family = Family::kDeltaLinear;
  double delta = 1.0;   // kDeltaLinear only
  double weight = 1.0;  // aon / clique weight, delta-linear scale

  static SplittingSpec parse(const std::string& text);
  std::string to_string() const;

  CardinalitySplitting instantiate(std::size_t k, double edge_weight = 1.0) const;

  bool operator==(const SplittingSpec& other) const = default;
};

}  // namespace hyperlocal
