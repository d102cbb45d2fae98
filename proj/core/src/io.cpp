#include "hyperlocal/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

namespace hyperlocal {

namespace {

std::string at(const std::string& path, std::size_t line) {
  return path + ":" + std::to_string(line) + ": ";
}

double parse_weight(const std::string& token, const std::string& path, std::size_t line) {
  std::string num = token.substr(2);
  std::size_t used = 0;
  double w = 0;
  try {
    w = std::stod(num, &used);
  } catch (const std::exception&) {
    throw InputError(at(path, line) + "cannot parse weight '" + token + "'");
  }
  if (used != num.size() || !(w > 0.0) || std::isinf(w)) {
    throw InputError(at(path, line) + "weight must be positive and finite, got '" +
                     token + "'");
  }
  return w;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

NodeId IdMap::intern(const std::string& name) {
  auto [it, inserted] = ids_.try_emplace(name, static_cast<NodeId>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

NodeId IdMap::lookup(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) throw InputError("unknown node '" + name + "'");
  return it->second;
}

const std::string& IdMap::name(NodeId id) const {
  if (id >= names_.size()) throw InputError("node id out of range");
  return names_[id];
}

const NodeSet& LabeledDataset::label(const std::string& name) const {
  auto it = labels.find(name);
  if (it == labels.end()) throw InputError("unknown label '" + name + "'");
  return it->second;
}

LabeledDataset load_hypergraph(const std::string& path, const SplittingSpec& spec,
                               LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");

  LabeledDataset ds;
  std::vector<std::vector<NodeId>> edges;
  std::vector<double> weights;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream tokens(line);
    std::string token;
    std::vector<NodeId> pins;
    double weight = 1.0;
    bool first = true;
    while (tokens >> token) {
      if (first && token.rfind("w=", 0) == 0) {
        weight = parse_weight(token, path, line_no);
      } else {
        pins.push_back(ds.ids.intern(token));
      }
      first = false;
    }
    edges.push_back(std::move(pins));
    weights.push_back(weight);
  }

  Hypergraph::BuildInfo info;
  ds.hypergraph = Hypergraph(ds.ids.size(), edges, weights, spec, &info);
  if (report) report->dropped_degenerate_edges = info.dropped_degenerate_edges;
  return ds;
}

void load_labels(const std::string& path, LabeledDataset& ds, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw InputError(at(path, line_no) + "expected 'name: id id ...'");
    }
    std::string name = line.substr(0, colon);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
    while (!name.empty() && (name.front() == ' ' || name.front() == '\t')) name.erase(0, 1);
    if (name.empty()) throw InputError(at(path, line_no) + "label name is empty");

    std::istringstream tokens(line.substr(colon + 1));
    std::vector<NodeId> members;
    std::string token;
    while (tokens >> token) {
      try {
        members.push_back(ds.ids.lookup(token));
      } catch (const InputError&) {
        throw InputError(at(path, line_no) + "label '" + name +
                         "' names unknown node '" + token + "'");
      }
    }
    NodeSet set(std::move(members));
    auto [it, inserted] = ds.labels.try_emplace(name, set);
    if (!inserted) {
      it->second = it->second.unite(set);
      if (report) ++report->duplicate_label_names;
    }
  }
}

void save_hypergraph(const std::string& path, const LabeledDataset& ds) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  const Hypergraph& h = ds.hypergraph;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (h.edge_weight(e) != 1.0) out << "w=" << format_number(h.edge_weight(e));
    auto pins = h.edge(e);
    for (std::size_t i = 0; i < pins.size(); ++i) {
      if (i > 0 || h.edge_weight(e) != 1.0) out << ' ';
      out << ds.ids.name(pins[i]);
    }
    out << '\n';
  }
  if (!out) throw InputError("failed while writing '" + path + "'");
}

void save_labels(const std::string& path, const LabeledDataset& ds) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  for (const auto& [name, set] : ds.labels) {
    out << name << ':';
    for (NodeId v : set) out << ' ' << ds.ids.name(v);
    out << '\n';
  }
  if (!out) throw InputError("failed while writing '" + path + "'");
}

}  // namespace hyperlocal
