#include "hyperlocal/nodeset.hpp"

#include <algorithm>
#include <cmath>

namespace hyperlocal {

bool approx_eq(double a, double b, double rel) {
  if (a == b) return true;  // covers matching infinities
  if (std::isinf(a) || std::isinf(b)) return false;
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= rel * scale;
}

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet::NodeSet(std::initializer_list<NodeId> members)
    : NodeSet(std::vector<NodeId>(members)) {}

bool NodeSet::contains(NodeId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void NodeSet::add(NodeId v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

NodeSet NodeSet::unite(const NodeSet& other) const {
  NodeSet out;
  out.members_.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

NodeSet NodeSet::intersect(const NodeSet& other) const {
  NodeSet out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
  return out;
}

NodeSet NodeSet::difference(const NodeSet& other) const {
  NodeSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

NodeSet NodeSet::complement(NodeId universe_size) const {
  NodeSet out;
  out.members_.reserve(universe_size - members_.size());
  auto it = members_.begin();
  for (NodeId v = 0; v < universe_size; ++v) {
    if (it != members_.end() && *it == v) {
      ++it;
    } else {
      out.members_.push_back(v);
    }
  }
  return out;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool NodeSet::intersects(const NodeSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      return true;
    }
  }
  return false;
}

}  // namespace hyperlocal
