// Release gate for the clustering engine. Every check exercises the public
// API end to end: solver results against brute-force enumeration, gadget
// costs against the penalty tables, growth ceilings, recovery guarantees,
// and the seeded-recovery protocol. One [PASS]/[FAIL] line per check; the
// exit code is the number of failures. Numeric arguments select a subset,
// e.g. `acceptance 3 7`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hyperlocal/baselines.hpp"
#include "hyperlocal/hyperlocal.hpp"
#include "hyperlocal/local_solver.hpp"
#include "hyperlocal/maxflow.hpp"
#include "hyperlocal/oracle.hpp"
#include "hyperlocal/protocol.hpp"
#include "hyperlocal/reduction.hpp"
#include "hyperlocal/synth.hpp"
#include "hyperlocal/theorems.hpp"

namespace {

using namespace hyperlocal;
using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string text(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

bool close(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return std::isinf(a) && std::isinf(b);
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

int uni(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

// nonempty, with volume strictly between 0 and the total
NodeSet subset_with_volume(std::mt19937_64& rng, const Hypergraph& h) {
  for (;;) {
    std::vector<NodeId> picked;
    for (NodeId v = 0; v < h.num_nodes(); ++v) {
      if (uni(rng, 0, 1) == 1) picked.push_back(v);
    }
    NodeSet s(std::move(picked));
    if (s.empty()) continue;
    double vol = h.volume(s);
    if (vol > 0.0 && vol < h.total_volume()) return s;
  }
}

// ---------------------------------------------------------------------------
// Shared family of small random instances. Unit edge scale and integer delta
// keep the descent and ceiling checks applicable to every run; eps alternates
// between 1 and the locality floor vol(R)/vol(R complement).

struct SmallInstance {
  Hypergraph h;
  NodeSet r;
  double eps = 1.0;
};

SmallInstance draw_small(std::mt19937_64& rng, bool floor_eps) {
  NodeId n = static_cast<NodeId>(uni(rng, 6, 12));
  std::size_t m = static_cast<std::size_t>(uni(rng, 4, 15));
  std::vector<NodeId> ids(n);
  for (NodeId v = 0; v < n; ++v) ids[v] = v;

  std::vector<std::vector<NodeId>> edges;
  std::vector<CardinalitySplitting> splits;
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t k = static_cast<std::size_t>(uni(rng, 2, 5));
    std::vector<NodeId> pins;
    std::sample(ids.begin(), ids.end(), std::back_inserter(pins), k, rng);
    splits.push_back(CardinalitySplitting::delta_linear(k, uni(rng, 1, 2), 1.0));
    edges.push_back(std::move(pins));
  }
  Hypergraph h(n, edges, std::move(splits));

  SmallInstance inst;
  inst.r = subset_with_volume(rng, h);
  if (floor_eps) inst.eps = h.volume(inst.r) / (h.total_volume() - h.volume(inst.r));
  inst.h = std::move(h);
  return inst;
}

constexpr std::size_t kSmallRuns = 300;

struct HlcRuns {
  std::vector<SmallInstance> instances;
  std::vector<ClusterReport> reports;
  std::size_t mismatches = 0;
  std::string first_mismatch;
  double seconds = 0.0;
};

const HlcRuns& hlc_runs() {
  static const HlcRuns runs = [] {
    HlcRuns out;
    std::mt19937_64 rng(20230411);
    auto t0 = Clock::now();
    for (std::size_t i = 0; i < kSmallRuns; ++i) {
      SmallInstance inst = draw_small(rng, i % 2 == 1);
      ClusterReport rep =
          minimize_hlc(inst.h, inst.r, inst.eps, {}, MinimizeOptions{1e-12, 64});
      OracleResult oracle = brute_min_hlc(inst.h, inst.r, inst.eps);
      if (!close(rep.objective, oracle.value, 1e-9)) {
        if (out.mismatches == 0) {
          out.first_mismatch = text("run %zu: solver %.12g vs oracle %.12g", i,
                                    rep.objective, oracle.value);
        }
        ++out.mismatches;
      }
      out.instances.push_back(std::move(inst));
      out.reports.push_back(std::move(rep));
    }
    out.seconds = elapsed(t0);
    return out;
  }();
  return runs;
}

struct CutRuns {
  std::vector<SolveStats> stats;
  std::size_t mismatches = 0;
  std::string first_mismatch;
  double seconds = 0.0;
};

const CutRuns& cut_runs() {
  static const CutRuns runs = [] {
    CutRuns out;
    std::mt19937_64 rng(617281);
    auto t0 = Clock::now();
    for (std::size_t i = 0; i < kSmallRuns; ++i) {
      SmallInstance inst = draw_small(rng, i % 2 == 1);
      double alpha = 0.25 * uni(rng, 1, 12);
      LocalSolveResult local = solve_strongly_local(inst.h, inst.r, inst.eps, alpha);
      OracleResult oracle = brute_min_st_cut(inst.h, inst.r, inst.eps, alpha);
      StCutInstance global = build_st_instance(inst.h, inst.r, inst.eps, alpha);
      double global_value = global.solve();
      bool ok = close(local.cut_value, oracle.value, 1e-9) &&
                close(local.cut_value, global_value, 1e-9);
      if (!ok) {
        if (out.mismatches == 0) {
          out.first_mismatch =
              text("run %zu: local %.12g, oracle %.12g, global %.12g", i,
                   local.cut_value, oracle.value, global_value);
        }
        ++out.mismatches;
      }
      out.stats.push_back(std::move(local.stats));
    }
    out.seconds = elapsed(t0);
    return out;
  }();
  return runs;
}

// The instance behind the recovery-guarantee walkthrough below: two weighted
// 4-cycles joined by a heavy bridge. For T = {0,1,2,3} and R = {0,1},
// vol(T) = 12, vol(R) = 6, vol(V) = 24, cond(T) = 1/6, ncut(T) = 1/3, and at
// eps = vol(R)/vol(R complement) = 1/3 the slack mu is 0 with gamma = 1/3 and
// beta = 1/2, so the conductance bound is exactly 3 * cond(T) and the
// normalized-cut bound exactly 2 * ncut(T).
Hypergraph two_rings() {
  return Hypergraph(
      8,
      {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 4}},
      {2, 1, 1, 1, 2, 2, 1, 1, 1}, SplittingSpec::parse("aon:1"));
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// 1. Full minimization against subset enumeration.

Outcome check_hlc_oracle() {
  const HlcRuns& runs = hlc_runs();
  bool in_budget = runs.seconds < 60.0;
  if (runs.mismatches > 0) {
    return {false, text("%zu/%zu mismatches; first: %s", runs.mismatches, kSmallRuns,
                        runs.first_mismatch.c_str())};
  }
  return {in_budget,
          text("%zu/%zu objective values within 1e-9 (%.1f s)", kSmallRuns, kSmallRuns,
               runs.seconds)};
}

// ---------------------------------------------------------------------------
// 2. One localized cut against enumeration and a whole-graph network.

Outcome check_cut_oracle() {
  const CutRuns& runs = cut_runs();
  if (runs.mismatches > 0) {
    return {false, text("%zu/%zu mismatches; first: %s", runs.mismatches, kSmallRuns,
                        runs.first_mismatch.c_str())};
  }
  return {true, text("%zu/%zu cut values within 1e-9 (%.1f s)", kSmallRuns, kSmallRuns,
                     runs.seconds)};
}

// ---------------------------------------------------------------------------
// 3. Gadget disconnection costs, exhaustive over bipartitions.

Outcome check_gadget_costs() {
  auto t0 = Clock::now();
  std::size_t cases = 0;
  for (std::size_t k = 2; k <= 8; ++k) {
    for (std::size_t delta = 1; delta <= k / 2; ++delta) {
      for (double scale : {1.0, 0.75}) {
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
          FlowNetwork net;
          NodeId s = net.add_node();
          NodeId t = net.add_node();
          NodeId first_pin = net.add_nodes(k);
          NodeId entry = net.add_node();
          NodeId exit = net.add_node();
          net.add_arc(entry, exit, static_cast<double>(delta) * scale);
          std::size_t inside = 0;
          for (std::size_t i = 0; i < k; ++i) {
            NodeId pin = first_pin + static_cast<NodeId>(i);
            net.add_arc(pin, entry, scale);
            net.add_arc(exit, pin, scale);
            if (mask & (1u << i)) {
              net.add_arc(s, pin, kInfinity);
              ++inside;
            } else {
              net.add_arc(pin, t, kInfinity);
            }
          }
          double expected =
              scale * std::min({static_cast<double>(delta), static_cast<double>(inside),
                                static_cast<double>(k - inside)});
          double flow = net.max_flow(s, t);
          ++cases;
          if (flow != expected) {
            return {false, text("k=%zu delta=%zu scale=%g mask=%u: flow %.17g != %.17g",
                                k, delta, scale, mask, flow, expected)};
          }
        }
      }
    }
  }
  double secs = elapsed(t0);
  return {secs < 5.0, text("%zu bipartitions cost-exact (%.2f s)", cases, secs)};
}

// ---------------------------------------------------------------------------
// 4. Descent progress: cuts of accepted iterates strictly decrease, the
// round count stays within cut(R) + 1, and most runs settle within 5.

Outcome check_descent() {
  const HlcRuns& runs = hlc_runs();
  std::size_t within5 = 0;
  std::size_t max_rounds = 0;
  for (std::size_t i = 0; i < runs.reports.size(); ++i) {
    const ClusterReport& rep = runs.reports[i];
    if (!rep.converged) return {false, text("run %zu hit the round cap", i)};
    for (std::size_t j = 0; j + 1 < rep.trace.size(); ++j) {
      if (!(rep.trace[j + 1].cut < rep.trace[j].cut - 1e-9)) {
        return {false, text("run %zu: cut %.12g then %.12g", i, rep.trace[j].cut,
                            rep.trace[j + 1].cut)};
      }
    }
    double cap = runs.instances[i].h.cut(runs.instances[i].r) + 1.0;
    if (static_cast<double>(rep.iterations) > cap + 1e-9) {
      return {false, text("run %zu took %zu rounds, cap %.1f", i, rep.iterations, cap)};
    }
    max_rounds = std::max(max_rounds, rep.iterations);
    if (rep.iterations <= 5) ++within5;
  }
  double share =
      100.0 * static_cast<double>(within5) / static_cast<double>(runs.reports.size());
  return {share >= 90.0,
          text("cuts strictly decrease; max %zu rounds, %.1f%% within 5", max_rounds,
               share)};
}

// ---------------------------------------------------------------------------
// 5. Growth ceilings on every localized solve, including planted instances.

Outcome check_growth_ceilings() {
  std::size_t solves = 0;
  std::size_t violations = 0;
  std::string first;

  auto consider = [&](const SolveStats& st) {
    ++solves;
    LocalityBounds lb = locality_bounds(st);
    bool ok = lb.respected;
    // recomputed from the raw stats, independent of locality_bounds
    ok = ok && static_cast<double>(st.final_local_edges) <=
                   1.5 * (1.0 + 1.0 / st.eps) * st.vol_r + 1e-6;
    ok = ok && st.explored_volume <= st.vol_r / st.eps + 1e-6;
    ok = ok && static_cast<double>(st.final_local_nodes) <= lb.node_bound + 1e-6;
    if (!ok && violations == 0) {
      first = text("solve %zu: edges %zu/%.1f nodes %zu/%.1f explored %.3f/%.3f", solves,
                   st.final_local_edges, lb.edge_bound, st.final_local_nodes,
                   lb.node_bound, st.explored_volume, lb.explored_volume_bound);
    }
    if (!ok) ++violations;
  };

  for (const ClusterReport& rep : hlc_runs().reports) {
    for (const SolveStats& st : rep.solves) consider(st);
  }
  for (const SolveStats& st : cut_runs().stats) consider(st);

  SynthParams p;
  p.n_nodes = 3000;
  p.n_clusters = 8;
  p.cluster_size_min = 30;
  p.cluster_size_max = 60;
  p.edge_size_min = 2;
  p.edge_size_max = 5;
  p.intra_edges_per_node = 2.0;
  p.cross_fraction = 0.02;
  p.seed = 4242;
  LabeledDataset ds = synth_planted(p, SplittingSpec::parse("dlt:1"));
  if (!has_unit_minimum_penalty(ds.hypergraph)) {
    return {false, "planted generator lost the unit penalty floor"};
  }
  for (const auto& [name, cluster] : ds.labels) {
    const auto& mem = cluster.members();
    NodeSet r(std::vector<NodeId>(mem.begin(), mem.begin() + mem.size() / 2));
    for (double eps : {0.5, 1.0, 2.0}) {
      double alpha = ds.hypergraph.hlc(r, eps, r);
      if (!(alpha > 0.0) || std::isinf(alpha)) alpha = 0.5;
      consider(solve_strongly_local(ds.hypergraph, r, eps, alpha).stats);
    }
  }

  if (violations > 0) {
    return {false, text("%zu/%zu solves out of bounds; first: %s", violations, solves,
                        first.c_str())};
  }
  return {true, text("%zu solves within all three ceilings", solves)};
}

// ---------------------------------------------------------------------------
// 6. The localized path must not notice the size of the ambient graph, while
// a whole-graph build-and-solve slows down with it. Same planted cluster and
// reference at every size; per-region generator streams guarantee that.

Outcome check_scaling() {
  auto t_all = Clock::now();
  const NodeId sizes[3] = {10'000, 100'000, 1'000'000};
  double t_local[3] = {0, 0, 0};
  double t_global[3] = {0, 0, 0};
  NodeSet first_cluster;

  for (int idx = 0; idx < 3; ++idx) {
    SynthParams p;
    p.n_nodes = sizes[idx];
    p.n_clusters = 20;
    p.cluster_size_min = 150;
    p.cluster_size_max = 250;
    p.edge_size_min = 2;
    p.edge_size_max = 5;
    p.intra_edges_per_node = 2.0;
    // a fixed count of cross edges, not a fixed fraction: the cluster keeps
    // the same boundary scale at every ambient size
    p.cross_fraction = 500.0 / static_cast<double>(sizes[idx]);
    p.seed = 97;
    LabeledDataset ds = synth_planted(p, SplittingSpec::parse("dlt:1"));
    const Hypergraph& h = ds.hypergraph;
    const NodeSet& cluster = ds.label("c000");
    if (idx == 0) {
      first_cluster = cluster;
    } else if (!(cluster == first_cluster)) {
      return {false, "planted cluster changed with the ambient size"};
    }
    const auto& mem = cluster.members();
    NodeSet r(std::vector<NodeId>(mem.begin(), mem.begin() + mem.size() / 2));

    minimize_hlc(h, r, 1.0);  // warm caches before timing
    std::vector<double> locals;
    for (int rep = 0; rep < 5; ++rep) {
      auto t0 = Clock::now();
      minimize_hlc(h, r, 1.0);
      locals.push_back(elapsed(t0));
    }
    t_local[idx] = median(locals);

    double alpha0 = h.hlc(r, 1.0, r);
    std::vector<double> globals;
    for (int rep = 0; rep < (idx == 2 ? 1 : 3); ++rep) {
      auto t0 = Clock::now();
      StCutInstance inst = build_st_instance(h, r, 1.0, alpha0);
      inst.solve();
      globals.push_back(elapsed(t0));
    }
    t_global[idx] = median(globals);
  }

  double local_ratio = std::max({t_local[0], t_local[1], t_local[2]}) /
                       std::min({t_local[0], t_local[1], t_local[2]});
  double global_ratio = t_global[2] / t_global[0];
  double total = elapsed(t_all);
  bool pass = local_ratio < 3.0 && global_ratio > 100.0 && total < 300.0;
  return {pass,
          text("local %.0f/%.0f/%.0f ms (spread %.2fx), global %.0f/%.0f/%.0f ms "
               "(%.0fx over 100x nodes), %.0f s total",
               1e3 * t_local[0], 1e3 * t_local[1], 1e3 * t_local[2], local_ratio,
               1e3 * t_global[0], 1e3 * t_global[1], 1e3 * t_global[2], global_ratio,
               total)};
}

// ---------------------------------------------------------------------------
// 7. Recovery guarantees on every sampled target, plus the two-ring
// walkthrough where both bound factors are known in closed form.

Outcome check_guarantee_bounds() {
  const HlcRuns& runs = hlc_runs();
  std::mt19937_64 rng(777);
  std::size_t targets = 0;
  std::size_t violations = 0;
  std::string first;

  for (std::size_t i = 0; i < runs.instances.size(); ++i) {
    const SmallInstance& inst = runs.instances[i];
    const ClusterReport& rep = runs.reports[i];
    const std::vector<NodeId>& mem = inst.r.members();

    auto evaluate = [&](const NodeSet& t) {
      ++targets;
      GuaranteeReport g = check_guarantees(inst.h, rep, t, inst.r, inst.eps);
      for (const GuaranteeCheck& c : g.checks) {
        if (c.applicable && !c.holds) {
          if (violations == 0) {
            first = text("run %zu, %s: actual %.12g > bound %.12g", i, c.name.c_str(),
                         c.actual, c.bound);
          }
          ++violations;
        }
      }
    };

    if (mem.size() <= 10) {
      for (std::uint32_t mask = 1; mask < (1u << mem.size()); ++mask) {
        std::vector<NodeId> picked;
        for (std::size_t b = 0; b < mem.size(); ++b) {
          if (mask & (1u << b)) picked.push_back(mem[b]);
        }
        evaluate(NodeSet(std::move(picked)));
      }
    } else {
      for (int draw = 0; draw < 200; ++draw) {
        std::vector<NodeId> picked;
        while (picked.empty()) {
          picked.clear();
          for (NodeId v : mem) {
            if (uni(rng, 0, 1) == 1) picked.push_back(v);
          }
        }
        evaluate(NodeSet(std::move(picked)));
      }
    }
  }
  if (violations > 0) {
    return {false, text("%zu/%zu targets violated a bound; first: %s", violations,
                        targets, first.c_str())};
  }

  // closed-form walkthrough: factor 3 on conductance, factor 2 on ncut
  Hypergraph tr = two_rings();
  NodeSet r({0, 1});
  NodeSet t({0, 1, 2, 3});
  double eps = 1.0 / 3.0;
  ClusterReport rep = minimize_hlc(tr, r, eps, {}, MinimizeOptions{1e-12, 64});
  GuaranteeReport g = check_guarantees(tr, rep, t, r, eps);
  const GuaranteeCheck* cond = nullptr;
  const GuaranteeCheck* ncut = nullptr;
  for (const GuaranteeCheck& c : g.checks) {
    if (c.name == "overlap-conductance") cond = &c;
    if (c.name == "overlap-normalized-cut") ncut = &c;
  }
  bool walkthrough = cond != nullptr && ncut != nullptr &&
                     close(g.input.gamma, 1.0 / 3.0, 1e-12) &&
                     close(g.input.beta, 0.5, 1e-12) &&
                     cond->applicable && cond->holds && close(cond->bound, 0.5, 1e-12) &&
                     ncut->applicable && ncut->holds &&
                     close(ncut->bound, 2.0 / 3.0, 1e-12);
  if (!walkthrough) {
    return {false, text("two-ring walkthrough: gamma %.6g beta %.6g bounds %.6g/%.6g",
                        g.input.gamma, g.input.beta, cond ? cond->bound : -1.0,
                        ncut ? ncut->bound : -1.0)};
  }
  return {true, text("%zu sampled targets clean; walkthrough bounds 3x and 2x hold",
                     targets)};
}

// ---------------------------------------------------------------------------
// 8. Seeded recovery beats both neighborhood rankers on planted clusters,
// with the rankers handed the true cluster size.

Outcome check_recovery() {
  SynthParams p;
  p.n_nodes = 6000;
  p.n_clusters = 20;
  p.cluster_size_min = 30;
  p.cluster_size_max = 200;
  p.edge_size_min = 2;
  p.edge_size_max = 5;
  p.intra_edges_per_node = 1.8;
  p.cross_fraction = 0.10;
  p.seed = 73;
  LabeledDataset ds = synth_planted(p, SplittingSpec::parse("dlt:1"));

  RecoveryParams rp;
  rp.trials = 3;
  rp.rng_seed = 17;
  double sum_hl = 0.0, sum_bn = 0.0, sum_tn = 0.0;
  std::size_t clusters = 0;
  for (const auto& [name, target] : ds.labels) {
    auto outcomes = recover_cluster(ds.hypergraph, target, rp);
    for (const RecoveryOutcome& o : outcomes) {
      if (o.method == "hyperlocal") sum_hl += o.mean_f1;
      if (o.method == "best_neighbors") sum_bn += o.mean_f1;
      if (o.method == "top_neighbors") sum_tn += o.mean_f1;
    }
    ++clusters;
  }
  double hl = sum_hl / static_cast<double>(clusters);
  double bn = sum_bn / static_cast<double>(clusters);
  double tn = sum_tn / static_cast<double>(clusters);
  bool pass = hl >= bn && hl >= tn;
  return {pass, text("%zu clusters: mean F1 %.3f vs rankers %.3f / %.3f", clusters, hl,
                     bn, tn)};
}

// ---------------------------------------------------------------------------
// 9. Splitting-parameter direction. The noisy dataset plants wide edges that
// sit almost entirely inside one cluster (one stray pin each), so a set that
// covers the whole cluster clips them for one unit regardless of delta, while
// a set that keeps only the part of the cluster the seed ranker found slices
// them down the middle for min(delta, pins on the far side). At delta = 1
// dropping the missed chunk is cheap and the tight eps makes carrying its
// volume expensive, so the solver trims to the reference; at larger delta the
// slicing penalty outweighs the volume penalty and the solver climbs back out
// to the full cluster. With only tight small edges there is no such gradient
// and delta = 1 stays best.

Outcome check_delta_direction() {
  std::vector<double> deltas = {1.0, 2.0, 4.0, 8.0};

  SynthParams noisy;
  noisy.n_nodes = 1000;
  noisy.n_clusters = 10;
  noisy.cluster_size_min = 48;
  noisy.cluster_size_max = 72;
  noisy.edge_size_min = 2;
  noisy.edge_size_max = 4;
  noisy.intra_edges_per_node = 1.5;
  noisy.cross_fraction = 0.20;
  noisy.noise_edges = 300;
  noisy.noise_edge_size = 13;
  noisy.noise_pins_in_cluster = 12;
  noisy.seed = 29;
  LabeledDataset wide = synth_planted(noisy, SplittingSpec::parse("dlt:1"));
  RecoveryParams rp;
  rp.trials = 3;
  rp.rng_seed = 5;
  // no slack in the grown reference: the part of the cluster the ranker
  // misses is recoverable only by climbing the wide-edge penalty gradient
  rp.grow_factor = 1.0;
  rp.eps = 1.7;
  std::vector<SweepRow> rows_noisy = delta_sweep(wide.hypergraph, wide.label("c000"),
                                                 deltas, rp);

  SynthParams clean;
  clean.n_nodes = 1200;
  clean.n_clusters = 8;
  clean.cluster_size_min = 30;
  clean.cluster_size_max = 60;
  clean.edge_size_min = 2;
  clean.edge_size_max = 4;
  clean.intra_edges_per_node = 1.6;
  clean.cross_fraction = 0.12;
  clean.seed = 31;
  LabeledDataset tight = synth_planted(clean, SplittingSpec::parse("dlt:1"));
  RecoveryParams rp_clean;
  rp_clean.trials = 3;
  rp_clean.rng_seed = 5;
  std::vector<SweepRow> rows_clean = delta_sweep(tight.hypergraph, tight.label("c000"),
                                                 deltas, rp_clean);

  double clean_best_other = 0.0;
  for (std::size_t i = 1; i < rows_clean.size(); ++i) {
    clean_best_other = std::max(clean_best_other, rows_clean[i].mean_f1);
  }
  bool noisy_ok = rows_noisy.back().mean_f1 > rows_noisy.front().mean_f1;
  bool clean_ok = rows_clean.front().mean_f1 + 1e-12 >= clean_best_other;
  return {noisy_ok && clean_ok,
          text("wide edges: F1 %.3f -> %.3f over delta 1 -> 8; tight edges: %.3f at 1 "
               "vs %.3f best larger",
               rows_noisy.front().mean_f1, rows_noisy.back().mean_f1,
               rows_clean.front().mean_f1, clean_best_other)};
}

// ---------------------------------------------------------------------------
// 10. Two-uniform inputs: the graph specialization agrees exactly with
// enumeration of the graph objective.

Outcome check_two_uniform() {
  std::mt19937_64 rng(909090);
  const double eps_pool[3] = {0.5, 1.0, 2.0};
  for (std::size_t i = 0; i < 100; ++i) {
    NodeId n = static_cast<NodeId>(uni(rng, 5, 12));
    std::size_t m = static_cast<std::size_t>(uni(rng, static_cast<int>(n) - 1, 2 * n));
    std::vector<std::vector<NodeId>> edges;
    std::vector<double> weights;
    for (std::size_t e = 0; e < m; ++e) {
      NodeId a = static_cast<NodeId>(uni(rng, 0, n - 1));
      NodeId b = static_cast<NodeId>(uni(rng, 0, n - 2));
      if (b >= a) ++b;
      edges.push_back({a, b});
      weights.push_back(0.25 * uni(rng, 1, 12));
    }
    Hypergraph g(n, edges, weights, SplittingSpec::parse("aon:1"));
    NodeSet r = subset_with_volume(rng, g);
    double eps = eps_pool[i % 3];
    ClusterReport rep = flowseed_equivalent(g, r, eps, {}, MinimizeOptions{1e-12, 64});
    OracleResult oracle = brute_min_hlc(g, r, eps);
    if (rep.objective != oracle.value) {
      return {false, text("graph %zu: solver %.17g vs oracle %.17g", i, rep.objective,
                          oracle.value)};
    }
  }
  return {true, "100/100 graphs agree exactly with enumeration"};
}

struct Check {
  int id;
  const char* name;
  Outcome (*run)();
};

constexpr Check kChecks[] = {
    {1, "hlc vs brute force", check_hlc_oracle},
    {2, "st-cut vs brute force", check_cut_oracle},
    {3, "gadget costs", check_gadget_costs},
    {4, "descent progress", check_descent},
    {5, "growth ceilings", check_growth_ceilings},
    {6, "ambient-size independence", check_scaling},
    {7, "recovery guarantees", check_guarantee_bounds},
    {8, "seeded recovery", check_recovery},
    {9, "delta direction", check_delta_direction},
    {10, "two-uniform graphs", check_two_uniform},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const Check& check : kChecks) {
    if (!wanted.empty() &&
        std::find(wanted.begin(), wanted.end(), check.id) == wanted.end()) {
      continue;
    }
    Outcome outcome;
    try {
      outcome = check.run();
    } catch (const std::exception& e) {
      outcome = {false, text("exception: %s", e.what())};
    }
    std::printf("[%s] %2d %-26s %s\n", outcome.pass ? "PASS" : "FAIL", check.id,
                check.name, outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  return failures;
}
