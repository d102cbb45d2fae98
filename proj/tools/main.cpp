// Command-line front end for the hyperlocal clustering engine.
//
// Every subcommand prints one JSON record per result line on stdout and a
// short human-readable summary on stderr, so stdout stays machine-parseable.
// Randomized subcommands echo their rng seed in the output record.
//
// Exit codes: 0 success, 1 bad input (files, labels, parameters), 2 internal
// failure (broken invariants, violated guarantees, unexpected exceptions).

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "hyperlocal/baselines.hpp"
#include "hyperlocal/hyperlocal.hpp"
#include "hyperlocal/io.hpp"
#include "hyperlocal/oracle.hpp"
#include "hyperlocal/protocol.hpp"
#include "hyperlocal/synth.hpp"
#include "hyperlocal/theorems.hpp"

namespace {

using json = nlohmann::json;
using namespace hyperlocal;

void emit(const json& record) { std::cout << record.dump() << "\n"; }

json names_of(const NodeSet& s, const IdMap& ids) {
  json out = json::array();
  for (NodeId v : s) out.push_back(ids.name(v));
  return out;
}

struct InputArgs {
  std::string hypergraph;
  std::string labels;
  std::string splitting = "dlt:1";
  CLI::Option* splitting_opt = nullptr;

  void attach(CLI::App* cmd, bool need_labels) {
    cmd->add_option("--hypergraph", hypergraph, "hypergraph file, one edge per line")
        ->required()
        ->check(CLI::ExistingFile);
    auto* lab = cmd->add_option("--labels", labels, "cluster labels file");
    if (need_labels) {
      lab->required()->check(CLI::ExistingFile);
    } else {
      lab->check(CLI::ExistingFile);
    }
    splitting_opt = cmd->add_option("--splitting", splitting,
                                    "per-edge splitting: aon:w, dlt:delta[:scale] or clique:w")
                        ->capture_default_str();
  }

  LabeledDataset load(const SplittingSpec& spec) const {
    LoadReport report;
    LabeledDataset ds = load_hypergraph(hypergraph, spec, &report);
    if (!labels.empty()) load_labels(labels, ds, &report);
    if (report.dropped_degenerate_edges > 0) {
      std::cerr << "note: dropped " << report.dropped_degenerate_edges
                << " degenerate edge(s) with fewer than two distinct pins\n";
    }
    return ds;
  }
};

// --- cluster ---------------------------------------------------------------

struct ClusterArgs {
  InputArgs input;
  std::string cluster;
  double eps = 1.0;
  double delta = 1.0;
  double seed_frac = 0.05;
  double grow = 2.0;
  std::uint64_t rng_seed = 1;
  bool trace = false;
  bool no_anchor = false;
};

void run_cluster(const ClusterArgs& a) {
  // --splitting names an arbitrary family; --delta is shorthand for dlt:<delta>
  SplittingSpec spec = a.input.splitting_opt->count() > 0
                           ? SplittingSpec::parse(a.input.splitting)
                           : SplittingSpec{SplittingSpec::Family::kDeltaLinear, a.delta, 1.0};
  LabeledDataset ds = a.input.load(spec);
  const NodeSet& target = ds.label(a.cluster);

  std::mt19937_64 rng(a.rng_seed);
  SeedGrowResult grown = grow_reference(ds.hypergraph, target, a.seed_frac, a.grow, rng);
  ClusterReport report = minimize_hlc(ds.hypergraph, grown.reference, a.eps,
                                      a.no_anchor ? NodeSet{} : grown.seeds);
  F1Score score = f1_score(report.best_set, target);

  json rec{{"record", "cluster"},
           {"hypergraph", a.input.hypergraph},
           {"cluster", a.cluster},
           {"splitting", spec.to_string()},
           {"eps", a.eps},
           {"seed_fraction", a.seed_frac},
           {"grow_factor", a.grow},
           {"rng_seed", a.rng_seed},
           {"anchored", !a.no_anchor},
           {"seed_count", grown.seeds.size()},
           {"reference_size", grown.reference.size()},
           {"objective", report.objective},
           {"cut", ds.hypergraph.cut(report.best_set)},
           {"size", report.best_set.size()},
           {"iterations", report.iterations},
           {"converged", report.converged},
           {"precision", score.precision},
           {"recall", score.recall},
           {"f1", score.f1},
           {"warnings", report.warnings},
           {"set", names_of(report.best_set, ds.ids)}};
  emit(rec);
  if (a.trace) {
    for (std::size_t i = 0; i < report.trace.size(); ++i) {
      const IterationStats& it = report.trace[i];
      emit(json{{"record", "trace"},
                {"iteration", i},
                {"alpha", it.alpha},
                {"cut", it.cut},
                {"overlap", it.overlap},
                {"size", it.size}});
    }
  }
  std::fprintf(stderr,
               "cluster %s: |S| = %zu, objective %.6g, F1 %.3f "
               "(%zu inner solves, %s)\n",
               a.cluster.c_str(), report.best_set.size(), report.objective, score.f1,
               report.iterations, report.converged ? "converged" : "iteration cap hit");
}

// --- topn / bestn ----------------------------------------------------------

struct RankArgs {
  InputArgs input;
  std::string cluster;
  double seed_frac = 0.05;
  std::uint64_t rng_seed = 1;
  std::size_t count = 0;  // 0: fill to the target size
};

void run_ranking(const RankArgs& a, const char* method) {
  LabeledDataset ds = a.input.load(SplittingSpec::parse(a.input.splitting));
  const NodeSet& target = ds.label(a.cluster);

  std::mt19937_64 rng(a.rng_seed);
  // grow factor 1 keeps only the seed draw; the ranking fills the rest
  SeedGrowResult grown = grow_reference(ds.hypergraph, target, a.seed_frac, 1.0, rng);
  std::size_t fill = a.count;
  if (fill == 0) {
    fill = target.size() > grown.seeds.size() ? target.size() - grown.seeds.size() : 0;
  }
  std::vector<NodeId> ranked = std::string(method) == "topn"
                                   ? top_neighbors(ds.hypergraph, grown.seeds, fill)
                                   : best_neighbors(ds.hypergraph, grown.seeds, fill);
  NodeSet found = grown.seeds.unite(NodeSet(ranked));
  F1Score score = f1_score(found, target);

  emit(json{{"record", method},
            {"hypergraph", a.input.hypergraph},
            {"cluster", a.cluster},
            {"seed_fraction", a.seed_frac},
            {"rng_seed", a.rng_seed},
            {"seed_count", grown.seeds.size()},
            {"ranked_count", ranked.size()},
            {"size", found.size()},
            {"precision", score.precision},
            {"recall", score.recall},
            {"f1", score.f1},
            {"set", names_of(found, ds.ids)}});
  std::fprintf(stderr, "%s %s: |S| = %zu, F1 %.3f\n", method, a.cluster.c_str(),
               found.size(), score.f1);
}

// --- expand ----------------------------------------------------------------

struct ExpandArgs {
  InputArgs input;
  std::string output;
  bool weighted = false;
  std::size_t max_size = 50;
};

void run_expand(const ExpandArgs& a) {
  LabeledDataset ds = a.input.load(SplittingSpec::parse(a.input.splitting));
  CliqueExpansion exp = clique_expand(ds.hypergraph, a.weighted, a.max_size);
  LabeledDataset out{std::move(exp.graph), ds.labels, ds.ids};
  save_hypergraph(a.output, out);

  emit(json{{"record", "expand"},
            {"hypergraph", a.input.hypergraph},
            {"weighted", a.weighted},
            {"max_size", a.max_size},
            {"nodes", out.hypergraph.num_nodes()},
            {"edges", out.hypergraph.num_edges()},
            {"discarded_edges", exp.discarded_edges},
            {"output", a.output}});
  std::fprintf(stderr, "expanded to %" PRIu64 " nodes / %zu pair edges (%zu wide edge(s) discarded) -> %s\n",
               static_cast<std::uint64_t>(out.hypergraph.num_nodes()),
               static_cast<std::size_t>(out.hypergraph.num_edges()), exp.discarded_edges,
               a.output.c_str());
}

// --- oracle ----------------------------------------------------------------

struct OracleArgs {
  InputArgs input;
  std::string cluster;
  double eps = 1.0;
  double alpha = -1.0;
  bool conductance = false;
};

void run_oracle(const OracleArgs& a) {
  LabeledDataset ds = a.input.load(SplittingSpec::parse(a.input.splitting));
  if (ds.hypergraph.num_nodes() > kOracleMaxNodes) {
    throw InputError("oracle: exhaustive enumeration is capped at " +
                     std::to_string(kOracleMaxNodes) + " nodes");
  }

  OracleResult result;
  std::string mode;
  if (a.conductance) {
    mode = "conductance";
    result = brute_min_conductance(ds.hypergraph);
  } else {
    if (a.cluster.empty()) {
      throw InputError("oracle: --cluster is required unless --conductance is set");
    }
    const NodeSet& r = ds.label(a.cluster);
    if (a.alpha >= 0.0) {
      mode = "st_cut";
      result = brute_min_st_cut(ds.hypergraph, r, a.eps, a.alpha);
    } else {
      mode = "hlc";
      result = brute_min_hlc(ds.hypergraph, r, a.eps);
    }
  }

  json rec{{"record", "oracle"},
           {"mode", mode},
           {"hypergraph", a.input.hypergraph},
           {"splitting", a.input.splitting},
           {"value", result.value},
           {"witness", names_of(result.witness, ds.ids)}};
  if (!a.conductance) {
    rec["cluster"] = a.cluster;
    rec["eps"] = a.eps;
    if (a.alpha >= 0.0) rec["alpha"] = a.alpha;
  }
  emit(rec);
  std::fprintf(stderr, "oracle %s: value %.9g, witness size %zu\n", mode.c_str(),
               result.value, result.witness.size());
}

// --- synth -----------------------------------------------------------------

struct SynthArgs {
  SynthParams params;
  std::string splitting = "dlt:1";
  std::string output;
};

void run_synth(const SynthArgs& a) {
  LabeledDataset ds = synth_planted(a.params, SplittingSpec::parse(a.splitting));
  std::string hg_path = a.output + ".hg";
  std::string labels_path = a.output + ".labels";
  save_hypergraph(hg_path, ds);
  save_labels(labels_path, ds);

  emit(json{{"record", "synth"},
            {"nodes", ds.hypergraph.num_nodes()},
            {"edges", ds.hypergraph.num_edges()},
            {"clusters", ds.labels.size()},
            {"splitting", a.splitting},
            {"rng_seed", a.params.seed},
            {"output_hypergraph", hg_path},
            {"output_labels", labels_path}});
  std::fprintf(stderr, "planted %zu cluster(s) over %" PRIu64 " nodes / %zu edges -> %s, %s\n",
               ds.labels.size(), static_cast<std::uint64_t>(ds.hypergraph.num_nodes()),
               static_cast<std::size_t>(ds.hypergraph.num_edges()), hg_path.c_str(),
               labels_path.c_str());
}

// --- sweep -----------------------------------------------------------------

struct SweepArgs {
  InputArgs input;
  std::string cluster;
  std::vector<double> deltas{1.0, 2.0, 4.0, 8.0};
  RecoveryParams protocol;
};

void run_sweep(const SweepArgs& a) {
  LabeledDataset ds = a.input.load(SplittingSpec::parse(a.input.splitting));
  const NodeSet& target = ds.label(a.cluster);
  std::vector<SweepRow> rows = delta_sweep(ds.hypergraph, target, a.deltas, a.protocol);

  emit(json{{"record", "sweep"},
            {"hypergraph", a.input.hypergraph},
            {"cluster", a.cluster},
            {"eps", a.protocol.eps},
            {"seed_fraction", a.protocol.seed_fraction},
            {"grow_factor", a.protocol.grow_factor},
            {"trials", a.protocol.trials},
            {"rng_seed", a.protocol.rng_seed},
            {"anchored", a.protocol.anchor_seeds}});
  std::fprintf(stderr, "  delta   mean F1\n");
  for (const SweepRow& row : rows) {
    emit(json{{"record", "sweep_row"}, {"delta", row.delta}, {"mean_f1", row.mean_f1}});
    std::fprintf(stderr, "%7g   %.4f\n", row.delta, row.mean_f1);
  }
}

// --- check-theorems ---------------------------------------------------------

struct TheoremArgs {
  InputArgs input;
  std::string cluster;
  double eps = 1.0;
  double seed_frac = 0.05;
  double grow = 2.0;
  std::uint64_t rng_seed = 1;
};

int run_check_theorems(const TheoremArgs& a) {
  LabeledDataset ds = a.input.load(SplittingSpec::parse(a.input.splitting));
  const NodeSet& target = ds.label(a.cluster);

  std::mt19937_64 rng(a.rng_seed);
  SeedGrowResult grown = grow_reference(ds.hypergraph, target, a.seed_frac, a.grow, rng);
  // guarantees require unanchored solves, so seeds stay out of the call
  ClusterReport report = minimize_hlc(ds.hypergraph, grown.reference, a.eps);
  GuaranteeReport audit = check_guarantees(ds.hypergraph, report, target,
                                           grown.reference, a.eps);

  emit(json{{"record", "guarantee_input"},
            {"hypergraph", a.input.hypergraph},
            {"cluster", a.cluster},
            {"eps", a.eps},
            {"rng_seed", a.rng_seed},
            {"vol_t", audit.input.vol_t},
            {"vol_r", audit.input.vol_r},
            {"vol_total", audit.input.vol_total},
            {"cond_t", audit.input.cond_t},
            {"ncut_t", audit.input.ncut_t},
            {"eps0", audit.input.eps0},
            {"mu", audit.input.mu},
            {"gamma", audit.input.gamma},
            {"beta", audit.input.beta},
            {"t_subset_of_r", audit.input.t_subset_of_r}});
  int violated = 0;
  for (const GuaranteeCheck& check : audit.checks) {
    emit(json{{"record", "guarantee"},
              {"name", check.name},
              {"applicable", check.applicable},
              {"holds", check.holds},
              {"bound", check.bound},
              {"actual", check.actual},
              {"slack", check.slack},
              {"note", check.note}});
    const char* status = !check.applicable ? "skipped" : (check.holds ? "holds" : "VIOLATED");
    std::fprintf(stderr, "%-28s %-9s", check.name.c_str(), status);
    if (check.applicable) {
      std::fprintf(stderr, " bound %.6g actual %.6g", check.bound, check.actual);
    } else {
      std::fprintf(stderr, " (%s)", check.note.c_str());
    }
    std::fprintf(stderr, "\n");
    if (check.applicable && !check.holds) ++violated;
  }
  if (violated > 0) {
    std::fprintf(stderr, "%d guarantee(s) violated\n", violated);
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly local hypergraph clustering engine"};
  app.require_subcommand(1);

  ClusterArgs cluster_args;
  CLI::App* cluster = app.add_subcommand("cluster", "grow a reference set and minimize the localized ratio objective");
  cluster_args.input.attach(cluster, true);
  cluster->add_option("--cluster", cluster_args.cluster, "target cluster label")->required();
  cluster->add_option("--eps", cluster_args.eps, "locality penalty")->capture_default_str();
  cluster->add_option("--delta", cluster_args.delta, "delta-linear splitting threshold")
      ->check(CLI::Range(1.0, 1e9))
      ->capture_default_str()
      ->excludes(cluster_args.input.splitting_opt);
  cluster->add_option("--seed-frac", cluster_args.seed_frac, "fraction of the target sampled as seeds")->capture_default_str();
  cluster->add_option("--grow", cluster_args.grow, "reference size as a multiple of the target size")->capture_default_str();
  cluster->add_option("--rng-seed", cluster_args.rng_seed, "seed draw rng")->capture_default_str();
  cluster->add_flag("--trace", cluster_args.trace, "emit one record per accepted iterate");
  cluster->add_flag("--no-anchor", cluster_args.no_anchor, "do not pin seed nodes into the solution");

  RankArgs topn_args;
  CLI::App* topn = app.add_subcommand("topn", "rank candidates by seed-incident edge count");
  topn_args.input.attach(topn, true);
  topn->add_option("--cluster", topn_args.cluster, "target cluster label")->required();
  topn->add_option("--seed-frac", topn_args.seed_frac, "fraction of the target sampled as seeds")->capture_default_str();
  topn->add_option("--rng-seed", topn_args.rng_seed, "seed draw rng")->capture_default_str();
  topn->add_option("-k,--count", topn_args.count, "ranked nodes to keep (0: fill to the target size)")->capture_default_str();

  RankArgs bestn_args;
  CLI::App* bestn = app.add_subcommand("bestn", "rank candidates by fraction of incident edges touching the seeds");
  bestn_args.input.attach(bestn, true);
  bestn->add_option("--cluster", bestn_args.cluster, "target cluster label")->required();
  bestn->add_option("--seed-frac", bestn_args.seed_frac, "fraction of the target sampled as seeds")->capture_default_str();
  bestn->add_option("--rng-seed", bestn_args.rng_seed, "seed draw rng")->capture_default_str();
  bestn->add_option("-k,--count", bestn_args.count, "ranked nodes to keep (0: fill to the target size)")->capture_default_str();

  ExpandArgs expand_args;
  CLI::App* expand = app.add_subcommand("expand", "replace every hyperedge by a clique over its pins");
  expand_args.input.attach(expand, false);
  expand->add_option("--output", expand_args.output, "where to write the 2-uniform hypergraph")->required();
  expand->add_flag("--weighted", expand_args.weighted, "weight pairs by edge weight / edge size");
  expand->add_option("--max-size", expand_args.max_size, "discard hyperedges with at least this many pins")->capture_default_str();

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive-enumeration reference values on small inputs");
  oracle_args.input.attach(oracle, false);
  oracle->add_option("--cluster", oracle_args.cluster, "reference set label");
  oracle->add_option("--eps", oracle_args.eps, "locality penalty")->capture_default_str();
  oracle->add_option("--alpha", oracle_args.alpha, "solve the localized cut at this alpha instead of the ratio objective");
  oracle->add_flag("--conductance", oracle_args.conductance, "global minimum conductance instead of localized objectives");

  SynthArgs synth_args;
  CLI::App* synth = app.add_subcommand("synth", "generate a planted-cluster hypergraph with ground-truth labels");
  synth->add_option("--nodes", synth_args.params.n_nodes, "total node count")->required();
  synth->add_option("--clusters", synth_args.params.n_clusters, "planted cluster count")->capture_default_str();
  synth->add_option("--size-min", synth_args.params.cluster_size_min, "smallest cluster size")->required();
  synth->add_option("--size-max", synth_args.params.cluster_size_max, "largest cluster size")->required();
  synth->add_option("--edge-min", synth_args.params.edge_size_min, "smallest edge size")->capture_default_str();
  synth->add_option("--edge-max", synth_args.params.edge_size_max, "largest edge size")->capture_default_str();
  synth->add_option("--coverage-passes", synth_args.params.coverage_passes, "chained shuffles covering each region")->capture_default_str();
  synth->add_option("--intra", synth_args.params.intra_edges_per_node, "random internal edges per cluster node")->capture_default_str();
  synth->add_option("--cross", synth_args.params.cross_fraction, "cross edges as a fraction of the node count")->capture_default_str();
  synth->add_option("--noise-edges", synth_args.params.noise_edges, "wide edges straddling a cluster and the background")->capture_default_str();
  synth->add_option("--noise-size", synth_args.params.noise_edge_size, "pins per wide edge")->capture_default_str();
  synth->add_option("--noise-pins", synth_args.params.noise_pins_in_cluster, "wide-edge pins inside the cluster")->capture_default_str();
  synth->add_option("--seed", synth_args.params.seed, "generator rng seed")->capture_default_str();
  synth->add_option("--splitting", synth_args.splitting, "per-edge splitting: aon:w, dlt:delta[:scale] or clique:w")->capture_default_str();
  synth->add_option("--output", synth_args.output, "path prefix for <prefix>.hg and <prefix>.labels")->required();

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "re-run the recovery protocol across delta values");
  sweep_args.input.attach(sweep, true);
  sweep->add_option("--cluster", sweep_args.cluster, "target cluster label")->required();
  sweep->add_option("--deltas", sweep_args.deltas, "delta values to sweep")->delimiter(',')->capture_default_str();
  sweep->add_option("--eps", sweep_args.protocol.eps, "locality penalty")->capture_default_str();
  sweep->add_option("--seed-frac", sweep_args.protocol.seed_fraction, "fraction of the target sampled as seeds")->capture_default_str();
  sweep->add_option("--grow", sweep_args.protocol.grow_factor, "reference size as a multiple of the target size")->capture_default_str();
  sweep->add_option("--trials", sweep_args.protocol.trials, "independent seed draws per delta")->capture_default_str();
  sweep->add_option("--rng-seed", sweep_args.protocol.rng_seed, "base rng seed for the trials")->capture_default_str();

  TheoremArgs theorem_args;
  CLI::App* theorems = app.add_subcommand("check-theorems", "audit the recovery guarantees against a known target");
  theorem_args.input.attach(theorems, true);
  theorems->add_option("--cluster", theorem_args.cluster, "target cluster label")->required();
  theorems->add_option("--eps", theorem_args.eps, "locality penalty")->capture_default_str();
  theorems->add_option("--seed-frac", theorem_args.seed_frac, "fraction of the target sampled as seeds")->capture_default_str();
  theorems->add_option("--grow", theorem_args.grow, "reference size as a multiple of the target size")->capture_default_str();
  theorems->add_option("--rng-seed", theorem_args.rng_seed, "seed draw rng")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(cluster)) {
      run_cluster(cluster_args);
    } else if (app.got_subcommand(topn)) {
      run_ranking(topn_args, "topn");
    } else if (app.got_subcommand(bestn)) {
      run_ranking(bestn_args, "bestn");
    } else if (app.got_subcommand(expand)) {
      run_expand(expand_args);
    } else if (app.got_subcommand(oracle)) {
      run_oracle(oracle_args);
    } else if (app.got_subcommand(synth)) {
      run_synth(synth_args);
    } else if (app.got_subcommand(sweep)) {
      run_sweep(sweep_args);
    } else if (app.got_subcommand(theorems)) {
      return run_check_theorems(theorem_args);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
