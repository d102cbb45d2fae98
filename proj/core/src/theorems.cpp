#include "hyperlocal/theorems.hpp"

#include <algorithm>
#include <cmath>

namespace hyperlocal {

namespace {
constexpr double kTol = 1e-9;

bool leq(double actual, double bound) {
  if (std::isinf(bound)) return true;
  return actual <= bound + kTol * std::max(1.0, std::abs(bound));
}
}  // namespace

GuaranteeInput GuaranteeInput::measure(const Hypergraph& h, const NodeSet& target,
                                       const NodeSet& r, double eps) {
  if (target.empty()) throw InputError("guarantees: target cluster is empty");
  if (r.empty()) throw InputError("guarantees: reference set is empty");

  GuaranteeInput in;
  in.eps = eps;
  in.vol_t = h.volume(target);
  in.vol_r = h.volume(r);
  in.vol_total = h.total_volume();
  in.cond_t = h.conductance(target);
  in.ncut_t = h.normalized_cut(target);
  in.t_subset_of_r = target.is_subset_of(r);

  double vol_r_rest = in.vol_total - in.vol_r;
  in.eps0 = vol_r_rest > 0.0 ? in.vol_r / vol_r_rest : kInfinity;
  in.mu = eps - in.eps0;

  double vol_tr = h.volume(target.intersect(r));
  double vol_t_rest = in.vol_total - in.vol_t;
  in.g = vol_r_rest * vol_tr - in.vol_r * (in.vol_t - vol_tr);
  if (in.vol_t > 0.0 && in.vol_total > 0.0 && vol_r_rest > 0.0) {
    in.gamma = (vol_tr / in.vol_t - in.vol_r / in.vol_total) * in.vol_total / vol_r_rest;
  }
  if (in.vol_t > 0.0 && vol_t_rest > 0.0) {
    double r_inside = vol_tr / in.vol_t;
    double r_outside = (in.vol_r - vol_tr) / vol_t_rest;
    in.beta = r_inside - r_outside;
  }
  return in;
}

GuaranteeReport check_guarantees(const Hypergraph& h, const ClusterReport& report,
                                 const NodeSet& target, const NodeSet& r, double eps) {
  GuaranteeReport out;
  out.input = GuaranteeInput::measure(h, target, r, eps);
  const GuaranteeInput& in = out.input;

  double cond_s = h.conductance(report.best_set);
  double ncut_s = h.normalized_cut(report.best_set);
  double vol_t_rest = in.vol_total - in.vol_t;
  double vol_r_rest = in.vol_total - in.vol_r;

  // anchoring dominates any other reason a check was inapplicable
  auto skip_all = [&](const std::string& why) {
    for (GuaranteeCheck& c : out.checks) {
      if (!c.applicable) c.note = why;
    }
  };

  {
    GuaranteeCheck c;
    c.name = "contained-target-conductance";
    c.actual = cond_s;
    c.bound = in.cond_t;
    c.applicable = !report.seeds_anchored && in.t_subset_of_r &&
                   in.vol_r <= vol_r_rest + kTol && in.mu >= -kTol;
    if (!c.applicable) {
      if (!in.t_subset_of_r) c.note = "target is not contained in the reference set";
      else if (in.vol_r > vol_r_rest + kTol) c.note = "reference set holds the volume majority";
      else if (in.mu < -kTol) c.note = "eps below vol(R)/vol(R complement)";
    } else {
      c.holds = leq(c.actual, c.bound);
      c.slack = c.bound - c.actual;
    }
    out.checks.push_back(std::move(c));
  }

  {
    GuaranteeCheck c;
    c.name = "overlap-conductance";
    c.actual = cond_s;
    double denom = in.gamma - in.mu;
    c.applicable = !report.seeds_anchored && in.vol_t <= vol_t_rest + kTol &&
                   in.vol_r <= vol_r_rest + kTol && in.mu >= -kTol &&
                   in.gamma > in.mu + kTol && in.gamma < 1.0 + kTol;
    if (c.applicable) {
      c.bound = std::isinf(in.cond_t) ? kInfinity : in.cond_t / denom;
      c.holds = leq(c.actual, c.bound);
      c.slack = c.bound - c.actual;
    } else if (in.vol_t > vol_t_rest + kTol) {
      c.note = "target holds the volume majority";
    } else if (in.vol_r > vol_r_rest + kTol) {
      c.note = "reference set holds the volume majority";
    } else if (in.mu < -kTol) {
      c.note = "eps below vol(R)/vol(R complement)";
    } else {
      c.note = "gamma outside (mu, 1)";
    }
    out.checks.push_back(std::move(c));
  }

  {
    GuaranteeCheck c;
    c.name = "overlap-normalized-cut";
    c.actual = ncut_s;
    double beta_floor = 2.0 * in.mu / (1.0 + 2.0 * in.mu);
    double denom = in.beta + 2.0 * in.mu * in.beta - 2.0 * in.mu;
    c.applicable = !report.seeds_anchored && in.vol_t <= vol_t_rest + kTol &&
                   in.vol_r <= vol_r_rest + kTol && in.mu >= -kTol &&
                   in.beta > beta_floor + kTol && in.beta < 1.0 + kTol;
    if (c.applicable) {
      c.bound = std::isinf(in.ncut_t) ? kInfinity : in.ncut_t / denom;
      c.holds = leq(c.actual, c.bound);
      c.slack = c.bound - c.actual;
    } else if (in.vol_t > vol_t_rest + kTol) {
      c.note = "target holds the volume majority";
    } else if (in.vol_r > vol_r_rest + kTol) {
      c.note = "reference set holds the volume majority";
    } else if (in.mu < -kTol) {
      c.note = "eps below vol(R)/vol(R complement)";
    } else {
      c.note = "beta outside (2mu/(1+2mu), 1)";
    }
    out.checks.push_back(std::move(c));
  }

  if (report.seeds_anchored) {
    skip_all("anchored seeds restrict the inner minimizer; guarantees void");
  }
  return out;
}

}  // namespace hyperlocal
