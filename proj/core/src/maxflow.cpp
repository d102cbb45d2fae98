#include "hyperlocal/maxflow.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperlocal {

namespace {
constexpr int kNone = -1;
}

NodeId FlowNetwork::add_node() {
  adjacency_stale_ = true;
  solved_ = false;
  return num_nodes_++;
}

NodeId FlowNetwork::add_nodes(std::size_t count) {
  NodeId first = num_nodes_;
  num_nodes_ += static_cast<NodeId>(count);
  adjacency_stale_ = true;
  solved_ = false;
  return first;
}

FlowNetwork::ArcId FlowNetwork::add_arc(NodeId from, NodeId to, double capacity) {
  if (from >= num_nodes_ || to >= num_nodes_) {
    throw InputError("flow network: arc endpoint out of range");
  }
  if (from == to) throw InputError("flow network: self loops not supported");
  if (!(capacity >= 0.0)) throw InputError("flow network: capacity must be non-negative");
  ArcId id = arcs_.size();
  arcs_.push_back(Arc{to, capacity, 0.0});
  arcs_.push_back(Arc{from, 0.0, 0.0});
  adjacency_stale_ = true;
  solved_ = false;
  return id;
}

double FlowNetwork::residual(ArcId a) const {
  double cap = arcs_[a].cap;
  if (std::isinf(cap)) cap = surrogate_;
  return cap - arcs_[a].flow;
}

void FlowNetwork::build_adjacency() {
  csr_ptr_.assign(num_nodes_ + 1, 0);
  for (ArcId a = 0; a < arcs_.size(); ++a) {
    ++csr_ptr_[arcs_[a ^ 1].head + 1];
  }
  for (NodeId v = 0; v < num_nodes_; ++v) csr_ptr_[v + 1] += csr_ptr_[v];
  arc_order_.resize(arcs_.size());
  std::vector<std::size_t> fill(csr_ptr_.begin(), csr_ptr_.end() - 1);
  for (ArcId a = 0; a < arcs_.size(); ++a) {
    arc_order_[fill[arcs_[a ^ 1].head]++] = a;
  }
  adjacency_stale_ = false;
}

bool FlowNetwork::infinite_path(NodeId s, NodeId t) const {
  std::vector<char> seen(num_nodes_, 0);
  std::vector<NodeId> queue{s};
  seen[s] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    NodeId u = queue[qi];
    for (std::size_t i = csr_ptr_[u]; i < csr_ptr_[u + 1]; ++i) {
      ArcId a = arc_order_[i];
      if (!std::isinf(arcs_[a].cap)) continue;
      NodeId w = arcs_[a].head;
      if (!seen[w]) {
        if (w == t) return true;
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

// Solver scratch lives here; the network object only keeps results.
namespace {

struct Levels {
  // doubly-linked membership of every node at its height, for gap detection
  std::vector<int> all_next, all_prev, all_head;
  // singly-linked stacks of active nodes per height
  std::vector<int> act_next, act_head;
  std::vector<char> in_active;
  int highest = kNone;

  void reset(NodeId n, int levels) {
    all_next.assign(n, kNone);
    all_prev.assign(n, kNone);
    all_head.assign(levels, kNone);
    act_next.assign(n, kNone);
    act_head.assign(levels, kNone);
    in_active.assign(n, 0);
    highest = kNone;
  }
  void insert(NodeId v, int h) {
    all_next[v] = all_head[h];
    all_prev[v] = kNone;
    if (all_head[h] != kNone) all_prev[all_head[h]] = static_cast<int>(v);
    all_head[h] = static_cast<int>(v);
  }
  void erase(NodeId v, int h) {
    if (all_prev[v] != kNone) {
      all_next[all_prev[v]] = all_next[v];
    } else {
      all_head[h] = all_next[v];
    }
    if (all_next[v] != kNone) all_prev[all_next[v]] = all_prev[v];
  }
  void activate(NodeId v, int h) {
    if (in_active[v]) return;
    in_active[v] = 1;
    act_next[v] = act_head[h];
    act_head[h] = static_cast<int>(v);
    highest = std::max(highest, h);
  }
};

}  // namespace

double FlowNetwork::max_flow(NodeId s, NodeId t) {
  if (s >= num_nodes_ || t >= num_nodes_) {
    throw InputError("flow network: terminal out of range");
  }
  if (s == t) throw InputError("flow network: source equals sink");
  if (adjacency_stale_) build_adjacency();
  for (Arc& a : arcs_) a.flow = 0.0;
  source_ = s;
  sink_ = t;
  solved_ = false;
  unbounded_ = false;

  if (infinite_path(s, t)) {
    solved_ = true;
    unbounded_ = true;
    flow_value_ = kInfinity;
    return kInfinity;
  }

  double finite_sum = 0.0;
  for (const Arc& a : arcs_) {
    if (!std::isinf(a.cap)) finite_sum += a.cap;
  }
  surrogate_ = finite_sum + 1.0;

  const NodeId n = num_nodes_;
  const int park = 2 * static_cast<int>(n) + 1;
  const std::size_t relabel_period = n;

  std::vector<int> height(n, park);
  std::vector<double> excess(n, 0.0);
  std::vector<std::size_t> cur(csr_ptr_.begin(), csr_ptr_.end() - 1);
  Levels lev;
  std::size_t relabels = 0;

  auto push_on = [&](ArcId a, double amount) {
    arcs_[a].flow += amount;
    arcs_[a ^ 1].flow -= amount;
    NodeId w = arcs_[a].head;
    excess[arcs_[a ^ 1].head] -= amount;
    excess[w] += amount;
    if (w != s && w != t && excess[w] > 0.0) lev.activate(w, height[w]);
  };

  // Exact heights: distance to t where t is residual-reachable, n plus the
  // distance to s elsewhere, park when neither. Rebuilds levels and actives.
  auto global_relabel = [&] {
    relabels = 0;
    std::fill(height.begin(), height.end(), park);
    std::vector<NodeId> queue;
    queue.reserve(n);
    auto grow = [&](NodeId root, int base) {
      queue.clear();
      if (height[root] != park && root != s) return;
      height[root] = base;
      queue.push_back(root);
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        NodeId u = queue[qi];
        for (std::size_t i = csr_ptr_[u]; i < csr_ptr_[u + 1]; ++i) {
          ArcId a = arc_order_[i];
          NodeId w = arcs_[a].head;
          if (height[w] != park || w == s) continue;
          if (residual(a ^ 1) > 0.0) {  // w -> u is residual
            height[w] = height[u] + 1;
            queue.push_back(w);
          }
        }
      }
    };
    grow(t, 0);
    height[s] = park;  // let grow(s, n) claim it
    grow(s, static_cast<int>(n));
    lev.reset(n, park + 1);
    for (NodeId v = 0; v < n; ++v) {
      lev.insert(v, height[v]);
      if (v != s && v != t && excess[v] > 0.0 && height[v] < park) {
        lev.activate(v, height[v]);
      }
    }
    std::copy(csr_ptr_.begin(), csr_ptr_.end() - 1, cur.begin());
  };

  auto relabel = [&](NodeId v) {
    ++relabels;
    int old = height[v];
    lev.erase(v, old);
    int best = park;
    for (std::size_t i = csr_ptr_[v]; i < csr_ptr_[v + 1]; ++i) {
      ArcId a = arc_order_[i];
      if (residual(a) > 0.0) best = std::min(best, height[arcs_[a].head] + 1);
    }
    if (old < static_cast<int>(n) && lev.all_head[old] == kNone) {
      // level emptied: everything strictly above it and below n lost its
      // path to t, including v itself
      for (int g = old + 1; g < static_cast<int>(n); ++g) {
        while (lev.all_head[g] != kNone) {
          NodeId u = static_cast<NodeId>(lev.all_head[g]);
          lev.erase(u, g);
          height[u] = static_cast<int>(n) + 1;
          lev.insert(u, height[u]);
        }
      }
      if (best < static_cast<int>(n) + 1) best = static_cast<int>(n) + 1;
    }
    height[v] = best;
    lev.insert(v, best);
  };

  auto discharge = [&](NodeId v) {
    const std::size_t end = csr_ptr_[v + 1];
    while (excess[v] > 0.0) {
      if (cur[v] == end) {
        relabel(v);
        cur[v] = csr_ptr_[v];
        if (height[v] >= park) return;  // no residual outlet at all
        if (relabels >= relabel_period) {
          // leftover excess is re-collected when levels are rebuilt
          return;
        }
        continue;
      }
      ArcId a = arc_order_[cur[v]];
      NodeId w = arcs_[a].head;
      if (residual(a) > 0.0 && height[v] == height[w] + 1) {
        push_on(a, std::min(excess[v], residual(a)));
      } else {
        ++cur[v];
      }
    }
  };

  global_relabel();
  for (std::size_t i = csr_ptr_[s]; i < csr_ptr_[s + 1]; ++i) {
    ArcId a = arc_order_[i];
    double r = residual(a);
    if (r > 0.0) push_on(a, r);
  }

  while (lev.highest >= 0) {
    int v = lev.act_head[lev.highest];
    if (v == kNone) {
      --lev.highest;
      continue;
    }
    lev.act_head[lev.highest] = lev.act_next[v];
    lev.in_active[v] = 0;
    NodeId u = static_cast<NodeId>(v);
    if (excess[u] <= 0.0) continue;
    if (height[u] != lev.highest) {
      // moved by a gap while queued; requeue at its real level
      if (height[u] < park) lev.activate(u, height[u]);
      continue;
    }
    discharge(u);
    if (relabels >= relabel_period) global_relabel();
  }

  flow_value_ = excess[t];
  solved_ = true;
  return flow_value_;
}

double FlowNetwork::flow_value() const {
  if (!solved_) throw StateError("flow network: no solve has run");
  return flow_value_;
}

NodeSet FlowNetwork::min_cut_source_side() const {
  if (!solved_) throw StateError("flow network: min cut requested before max_flow");
  if (unbounded_) throw StateError("flow network: min cut is unbounded");
  std::vector<char> seen(num_nodes_, 0);
  std::vector<NodeId> queue{source_};
  seen[source_] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    NodeId u = queue[qi];
    for (std::size_t i = csr_ptr_[u]; i < csr_ptr_[u + 1]; ++i) {
      ArcId a = arc_order_[i];
      NodeId w = arcs_[a].head;
      if (!seen[w] && residual(a) > 0.0) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  if (seen[sink_]) throw StateError("flow network: sink residual-reachable after solve");
  return NodeSet(std::move(queue));
}

double FlowNetwork::cut_capacity(const NodeSet& source_side) const {
  double total = 0.0;
  for (ArcId a = 0; a < arcs_.size(); ++a) {
    if (arcs_[a].cap <= 0.0) continue;
    if (source_side.contains(arcs_[a ^ 1].head) && !source_side.contains(arcs_[a].head)) {
      if (std::isinf(arcs_[a].cap)) return kInfinity;
      total += arcs_[a].cap;
    }
  }
  return total;
}

void FlowNetwork::check_flow() const {
  if (!solved_ || unbounded_) throw StateError("flow network: nothing to check");
  std::vector<double> net(num_nodes_, 0.0);
  double scale = 1.0;
  for (ArcId a = 0; a < arcs_.size(); a += 2) {
    double f = arcs_[a].flow;
    if (arcs_[a ^ 1].flow != -f) throw StateError("flow network: arc pair out of sync");
    double cap = std::isinf(arcs_[a].cap) ? surrogate_ : arcs_[a].cap;
    if (f < -1e-9 || f > cap + 1e-9 * std::max(1.0, cap)) {
      throw StateError("flow network: capacity violated");
    }
    net[arcs_[a ^ 1].head] -= f;
    net[arcs_[a].head] += f;
    scale = std::max(scale, std::abs(f));
  }
  for (NodeId v = 0; v < num_nodes_; ++v) {
    if (v == source_ || v == sink_) continue;
    if (std::abs(net[v]) > 1e-9 * scale) {
      throw StateError("flow network: conservation violated at node " + std::to_string(v));
    }
  }
}

}  // namespace hyperlocal
