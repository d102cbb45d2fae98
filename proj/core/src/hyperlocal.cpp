#include "hyperlocal/hyperlocal.hpp"

#include <string>

namespace hyperlocal {

ClusterReport minimize_hlc(const Hypergraph& h, const NodeSet& r, double eps,
                           const NodeSet& seeds, const MinimizeOptions& options) {
  if (r.empty()) throw InputError("minimize: reference set is empty");
  if (!(eps > 0.0)) throw InputError("minimize: eps must be positive");
  if (!seeds.is_subset_of(r)) {
    throw InputError("minimize: seeds must lie inside the reference set");
  }

  ClusterReport report;
  report.seeds_anchored = !seeds.empty();
  if (report.seeds_anchored) {
    report.warnings.push_back(
        "seeds are anchored to the cluster; inner cuts are optimal only among "
        "sets containing them");
  }

  std::vector<NodeId> connected;
  for (NodeId v : r) {
    if (!h.incident_edges(v).empty()) connected.push_back(v);
  }
  if (connected.empty()) throw InputError("minimize: every reference node is isolated");
  std::size_t isolated = r.size() - connected.size();
  if (isolated > 0) {
    report.warnings.push_back(std::to_string(isolated) +
                              " isolated reference node(s) carry no volume and are ignored");
  }
  NodeSet ref(std::move(connected));
  NodeSet anchors = seeds.intersect(ref);

  double vol_r = h.volume(ref);
  double vol_rest = h.total_volume() - vol_r;
  if (!(vol_rest > 0.0)) {
    report.warnings.push_back("reference set carries the entire volume");
  } else {
    if (vol_r > vol_rest) {
      report.warnings.push_back("reference set carries the majority of the volume");
    }
    double eps0 = vol_r / vol_rest;
    if (eps < eps0 * (1.0 - 1e-12)) {
      report.warnings.push_back(
          "eps is below vol(R)/vol(complement); approximation guarantees are void");
    }
  }

  double alpha = h.hlc(ref, eps, ref);
  report.best_set = ref;
  report.trace.push_back(IterationStats{alpha, h.cut(ref), h.overlap_score(ref, eps, ref),
                                        ref.size()});

  while (report.iterations < options.max_iterations) {
    if (!(alpha > 0.0)) {
      report.converged = true;  // the objective cannot drop below zero
      break;
    }
    LocalSolveResult res = solve_strongly_local(h, ref, eps, alpha, anchors);
    ++report.iterations;
    report.solves.push_back(std::move(res.stats));

    double improved = h.hlc(ref, eps, res.cut_set);
    if (improved < alpha * (1.0 - options.tol)) {
      alpha = improved;
      report.best_set = std::move(res.cut_set);
      report.trace.push_back(IterationStats{alpha, h.cut(report.best_set),
                                            h.overlap_score(ref, eps, report.best_set),
                                            report.best_set.size()});
    } else {
      report.converged = true;
      break;
    }
  }
  if (!report.converged) {
    report.warnings.push_back("iteration cap reached before the objective settled");
  }

  report.objective = h.hlc(ref, eps, report.best_set);
  return report;
}

}  // namespace hyperlocal
