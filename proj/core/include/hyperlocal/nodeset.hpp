#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hyperlocal/types.hpp"

namespace hyperlocal {

// Set of node ids stored as a sorted duplicate-free vector. Membership is a
// binary search; set algebra runs as linear merges.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<NodeId> members);
  NodeSet(std::initializer_list<NodeId> members);

  bool contains(NodeId v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  const std::vector<NodeId>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  void add(NodeId v);

  NodeSet unite(const NodeSet& other) const;
  NodeSet intersect(const NodeSet& other) const;
  NodeSet difference(const NodeSet& other) const;
  NodeSet complement(NodeId universe_size) const;

  bool is_subset_of(const NodeSet& other) const;
  bool intersects(const NodeSet& other) const;

  bool operator==(const NodeSet& other) const = default;

 private:
  std::vector<NodeId> members_;
};

}  // namespace hyperlocal
