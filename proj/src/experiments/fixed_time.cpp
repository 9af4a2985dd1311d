#include <algorithm>

#include "common.hpp"
#include "wam/error.hpp"
#include "wam/experiments.hpp"
#include "wam/schrodinger.hpp"

namespace wam {

ExperimentReport fixed_time_amalgam_experiment(const FixedTimeConfig& cfg) {
  if (cfg.r_values.empty()) throw InvalidArgument("fixed-time needs at least one r");
  for (double r : cfg.r_values)
    if (!(r >= 2.0)) throw InvalidArgument("fixed-time needs r >= 2");
  const Grid grid = make_grid(cfg.dim, cfg.extent, cfg.points);
  const auto ts = geometric_points(cfg.t_lo, cfg.t_hi, cfg.n_points);
  const Trajectory tr = propagate_many(sample(Gaussian{1.0}, grid), ts);

  ExperimentReport rep;
  rep.name = "fixed-time";
  rep.params = {{"dim", cfg.dim},       {"t_range", {cfg.t_lo, cfg.t_hi}},
                {"n_points", cfg.n_points}, {"extent", cfg.extent},
                {"points", cfg.points}};
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (double r : cfg.r_values) rs.push_back(detail::tag(r));
  rep.params["r_values"] = rs;

  double worst_boundary = 0.0;
  for (const auto& s : tr.states) worst_boundary = std::max(worst_boundary, boundary_mass(s));
  rep.add(make_check("boundary_mass", worst_boundary, 0.0, Provenance::derived, 1e-6,
                     CheckMode::at_most));

  for (double r : cfg.r_values) {
    // W(FL^{r'}, L^r) with r' the conjugate exponent.
    const double r_conj = std::isinf(r) ? 1.0 : r / (r - 1.0);
    const AmalgamSpec spec = make_amalgam_spec(grid, {LocalTransform::fourier, r_conj}, {r});
    const LocalNormEvaluator ev(grid, spec);
    std::vector<double> norms;
    for (const auto& s : tr.states) norms.push_back(ev.norm(s, LatticeSymmetry::reflections));
    const DecayFit fit = fit_decay(ts, norms);
    const double exponent = cfg.dim * (0.5 - (std::isinf(r) ? 0.0 : 1.0 / r));
    rep.add(make_check("slope_r=" + detail::tag(r), fit.slope, -exponent, Provenance::paper,
                       r == 2.0 ? 0.02 : 0.05, CheckMode::abs));
    nlohmann::ordered_json series = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) series.push_back({ts[i], norms[i]});
    rep.diagnostics["norms_r=" + detail::tag(r)] = series;
  }
  return rep;
}

}  // namespace wam
