#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperlocal/hypergraph.hpp"
#include "hyperlocal/nodeset.hpp"

namespace hyperlocal {

// External node names mapped to dense ids in order of first appearance.
class IdMap {
 public:
  NodeId intern(const std::string& name);
  NodeId lookup(const std::string& name) const;  // throws for unknown names
  const std::string& name(NodeId id) const;
  NodeId size() const { return static_cast<NodeId>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> ids_;
};

struct LabeledDataset {
  Hypergraph hypergraph;
  std::map<std::string, NodeSet> labels;
  IdMap ids;

  const NodeSet& label(const std::string& name) const;
};

struct LoadReport {
  std::size_t dropped_degenerate_edges = 0;
  std::size_t duplicate_label_names = 0;
};

// One hyperedge per line: whitespace-separated external ids, optionally led
// by w=<float>. Ids interned in order of first appearance; edges with fewer
// than two distinct pins are dropped and counted.
LabeledDataset load_hypergraph(const std::string& path, const SplittingSpec& spec,
                               LoadReport* report = nullptr);

// One label per line: "name: id id id ...". Repeated names merge; ids must
// already exist in the dataset.
void load_labels(const std::string& path, LabeledDataset& ds,
                 LoadReport* report = nullptr);

void save_hypergraph(const std::string& path, const LabeledDataset& ds);
void save_labels(const std::string& path, const LabeledDataset& ds);

}  // namespace hyperlocal
