#include <algorithm>

#include "common.hpp"
#include "wam/error.hpp"
#include "wam/experiments.hpp"
#include "wam/schrodinger.hpp"

namespace wam {
namespace {

double relative_l2_error(const GridFunction& f, const GridFunction& ref) {
  return lp_norm(add(f, scale(ref, -1.0)), 2.0) / lp_norm(ref, 2.0);
}

// Trapezoid-rule L^p norm in time of equally spaced samples.
double time_lp(const std::vector<double>& v, double dt, double p) {
  if (std::isinf(p)) return *std::max_element(v.begin(), v.end());
  double sum = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double w = (k == 0 || k + 1 == v.size()) ? 0.5 : 1.0;
    sum += w * std::pow(v[k], p);
  }
  return std::pow(sum * dt, 1.0 / p);
}

}  // namespace

ExperimentReport potential_experiment(const PotentialConfig& cfg) {
  const AdmissiblePair pair = make_admissible_pair(cfg.pair.q, cfg.pair.r, cfg.pair.dim);
  if (pair.dim != 1) throw InvalidArgument("potential experiment is one-dimensional");
  PotentialSpec v;
  v.evaluator = [](double t, std::span<const double> x) {
    return std::cos(t) * std::exp(-x[0] * x[0]);
  };
  v.alpha = cfg.claimed_alpha;
  v.p = cfg.claimed_p;
  check_potential_class(v, 1);
  const PotentialSpec zero{[](double, std::span<const double>) { return 0.0; }, v.alpha, v.p};

  const Grid grid = make_grid(1, cfg.extent, cfg.points);
  const GridFunction u0 = sample(Gaussian{cfg.c}, grid);

  ExperimentReport rep;
  rep.name = "potential";
  rep.params = {{"potential", "cos(t) exp(-x^2)"},
                {"claimed_alpha", detail::tag(v.alpha)},
                {"claimed_p", detail::tag(v.p)},
                {"extent", cfg.extent},
                {"points", cfg.points},
                {"c", cfg.c},
                {"T", cfg.T},
                {"dt", cfg.dt},
                {"q", detail::tag(pair.q)},
                {"r", detail::tag(pair.r)}};
  rep.add(make_check("class_condition", 1.0 / v.alpha + 1.0 / v.p, 1.0, Provenance::paper, 0.0,
                     CheckMode::at_most));

  // V = 0 reduces the splitting to the free propagator.
  const Trajectory free_split = split_step_solve(u0, zero, cfg.T, cfg.dt);
  const Trajectory free_exact = propagate_many(u0, free_split.times);
  double degeneracy = 0.0;
  for (std::size_t k = 0; k < free_split.states.size(); ++k)
    degeneracy = std::max(degeneracy,
                          relative_l2_error(free_split.states[k], free_exact.states[k]));
  rep.add(make_check("zero_potential_degeneracy", degeneracy, 0.0, Provenance::trivial, 1e-10,
                     CheckMode::at_most));

  const Trajectory tr = split_step_solve(u0, v, cfg.T, cfg.dt);
  const double l2_0 = lp_norm(u0, 2.0);
  double drift = 0.0, boundary = 0.0;
  for (const auto& s : tr.states) {
    drift = std::max(drift, std::abs(lp_norm(s, 2.0) - l2_0) / l2_0);
    boundary = std::max(boundary, boundary_mass(s));
  }
  rep.add(make_check("l2_drift", drift, 0.0, Provenance::derived, 1e-10, CheckMode::at_most));
  rep.add(make_check("boundary_mass", boundary, 0.0, Provenance::derived, 1e-6,
                     CheckMode::at_most));

  // Strang order from dt and dt/2 against a dt/8 reference at t = T.
  const GridFunction ref = split_step_solve(u0, v, cfg.T, cfg.dt / 8.0, 8).states.back();
  const double e1 = relative_l2_error(tr.states.back(), ref);
  const double e2 = relative_l2_error(split_step_solve(u0, v, cfg.T, cfg.dt / 2.0, 2).states.back(), ref);
  const double order = std::log2(e1 / e2);
  rep.add(make_check("strang_order", order, 2.0, Provenance::derived, 0.2, CheckMode::abs));

  // L^{q/2}(I_T; W(FL^{r'}, L^r)) of the solution.
  const double r_conj = std::isinf(pair.r) ? 1.0 : pair.r / (pair.r - 1.0);
  const AmalgamSpec space = make_amalgam_spec(grid, {LocalTransform::fourier, r_conj}, {pair.r});
  const LocalNormEvaluator ev(grid, space);
  std::vector<double> norms;
  for (const auto& s : tr.states) norms.push_back(ev.norm(s));
  const double mixed = time_lp(norms, cfg.dt, pair.q / 2.0);
  rep.add(make_check("strichartz_norm", mixed, 0.0, Provenance::paper, 0.0, CheckMode::finite));

  rep.diagnostics["strang_errors"] = {e1, e2};
  rep.diagnostics["space_norms"] = norms;
  return rep;
}

}  // namespace wam
