#include "hyperlocal/splitting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

namespace hyperlocal {

CardinalitySplitting::CardinalitySplitting(std::size_t k, std::vector<double> table)
    : k_(k), table_(std::move(table)) {}

CardinalitySplitting CardinalitySplitting::delta_linear(std::size_t k, double delta,
                                                        double scale) {
  if (k == 0) throw InputError("splitting: edge size must be positive");
  if (delta < 1.0) throw InputError("splitting: delta must be at least 1");
  if (!(scale > 0.0)) throw InputError("splitting: scale must be positive");
  std::vector<double> table(k / 2 + 1);
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = scale * std::min(delta, static_cast<double>(i));
  }
  return CardinalitySplitting(k, std::move(table));
}

CardinalitySplitting CardinalitySplitting::all_or_nothing(std::size_t k, double weight) {
  if (k == 0) throw InputError("splitting: edge size must be positive");
  if (!(weight > 0.0)) throw InputError("splitting: weight must be positive");
  std::vector<double> table(k / 2 + 1, weight);
  table[0] = 0.0;
  return CardinalitySplitting(k, std::move(table));
}

CardinalitySplitting CardinalitySplitting::clique(std::size_t k, double weight) {
  if (k == 0) throw InputError("splitting: edge size must be positive");
  if (!(weight > 0.0)) throw InputError("splitting: weight must be positive");
  std::vector<double> table(k / 2 + 1);
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = weight / static_cast<double>(k) * static_cast<double>(i) *
               static_cast<double>(k - i);
  }
  return CardinalitySplitting(k, std::move(table));
}

CardinalitySplitting CardinalitySplitting::from_table(std::size_t k,
                                                      std::vector<double> table) {
  if (k == 0) throw InputError("splitting: edge size must be positive");
  if (table.size() != k / 2 + 1) {
    throw InputError("splitting: table for edge size " + std::to_string(k) +
                     " must have " + std::to_string(k / 2 + 1) + " entries, got " +
                     std::to_string(table.size()));
  }
  if (table[0] != 0.0) throw InputError("splitting: empty side must have penalty 0");
  for (double v : table) {
    if (!(v >= 0.0) || std::isinf(v)) {
      throw InputError("splitting: penalties must be finite and non-negative");
    }
  }
  return CardinalitySplitting(k, std::move(table));
}

double CardinalitySplitting::penalty(std::size_t side_size) const {
  if (side_size > k_) throw InputError("splitting: side larger than the edge");
  return table_[std::min(side_size, k_ - side_size)];
}

std::optional<DeltaLinearForm> CardinalitySplitting::delta_linear_form() const {
  bool all_zero = std::all_of(table_.begin(), table_.end(),
                              [](double v) { return v == 0.0; });
  if (all_zero) return DeltaLinearForm{1.0, 0.0};
  double scale = table_[1];
  if (!(scale > 0.0)) return std::nullopt;
  double delta = table_.back() / scale;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    double want = scale * std::min(delta, static_cast<double>(i));
    if (!approx_eq(table_[i], want)) return std::nullopt;
  }
  return DeltaLinearForm{delta, scale};
}

namespace {

// f(a) + f(b) >= f(a + b - i) + f(i) for one cardinality class, where i is
// the intersection size. Every subset pair with these cardinalities yields
// the same four values, so checking classes checks the set inequality.
bool class_submodular(const CardinalitySplitting& sf, std::size_t a, std::size_t b,
                      std::size_t i) {
  double lhs = sf.penalty(a) + sf.penalty(b);
  double rhs = sf.penalty(a + b - i) + sf.penalty(i);
  return lhs >= rhs - 1e-12 * std::max(1.0, std::abs(rhs));
}

}  // namespace

bool CardinalitySplitting::is_submodular() const {
  if (k_ <= 12) {
    const std::uint32_t full = (k_ == 32 ? ~0u : (1u << k_) - 1u);
    for (std::uint32_t a = 0; a <= full; ++a) {
      for (std::uint32_t b = a; b <= full; ++b) {
        double lhs = penalty(std::popcount(a)) + penalty(std::popcount(b));
        double rhs = penalty(std::popcount(a | b)) + penalty(std::popcount(a & b));
        if (lhs < rhs - 1e-12 * std::max(1.0, std::abs(rhs))) return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(0x68796c6fu);
  std::uniform_int_distribution<std::size_t> pick(0, k_);
  for (int trial = 0; trial < 20000; ++trial) {
    std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    std::size_t lo = a + b > k_ ? a + b - k_ : 0;
    std::size_t hi = std::min(a, b);
    std::uniform_int_distribution<std::size_t> mid(lo, hi);
    if (!class_submodular(*this, a, b, mid(rng))) return false;
  }
  return true;
}

namespace {

double parse_positive(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError("splitting spec: cannot parse " + what + " '" + text + "'");
  }
  if (used != text.size() || !(value > 0.0) || std::isinf(value)) {
    throw InputError("splitting spec: " + what + " must be a positive number, got '" +
                     text + "'");
  }
  return value;
}

}  // namespace

SplittingSpec SplittingSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = text.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, colon - start));
    start = colon + 1;
  }
  SplittingSpec spec;
  const std::string& name = parts[0];
  if (name == "aon" && parts.size() == 2) {
    spec.family = Family::kAllOrNothing;
    spec.weight = parse_positive(parts[1], "weight");
  } else if (name == "clique" && parts.size() == 2) {
    spec.family = Family::kClique;
    spec.weight = parse_positive(parts[1], "weight");
  } else if (name == "dlt" && (parts.size() == 2 || parts.size() == 3)) {
    spec.family = Family::kDeltaLinear;
    spec.delta = parse_positive(parts[1], "delta");
    if (spec.delta < 1.0) throw InputError("splitting spec: delta must be at least 1");
    spec.weight = parts.size() == 3 ? parse_positive(parts[2], "scale") : 1.0;
  } else {
    throw InputError("splitting spec: expected aon:w, dlt:delta[:scale] or clique:w, got '" +
                     text + "'");
  }
  return spec;
}

std::string SplittingSpec::to_string() const {
  auto num = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  switch (family) {
    case Family::kAllOrNothing:
      return "aon:" + num(weight);
    case Family::kClique:
      return "clique:" + num(weight);
    case Family::kDeltaLinear:
      return weight == 1.0 ? "dlt:" + num(delta) : "dlt:" + num(delta) + ":" + num(weight);
  }
  return {};
}

CardinalitySplitting SplittingSpec::instantiate(std::size_t k, double edge_weight) const {
  if (!(edge_weight > 0.0)) throw InputError("splitting spec: edge weight must be positive");
  switch (family) {
    case Family::kAllOrNothing:
      return CardinalitySplitting::all_or_nothing(k, weight * edge_weight);
    case Family::kClique:
      return CardinalitySplitting::clique(k, weight * edge_weight);
    case Family::kDeltaLinear:
      return CardinalitySplitting::delta_linear(k, delta, weight * edge_weight);
  }
  throw StateError("splitting spec: unknown family");
}

}  // namespace hyperlocal
