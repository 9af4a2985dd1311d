#include <algorithm>

#include "common.hpp"
#include "wam/error.hpp"
#include "wam/experiments.hpp"
#include "wam/lorentz.hpp"
#include "wam/parallel.hpp"

namespace wam {
namespace {

// ||phi_alpha chi_[x-1, x+1]||_{L^{1/(2 alpha), inf}} on a half-cell grid of the piece.
double local_weak_norm(double alpha, double x, const Grid& piece) {
  return lorentz_quasinorm(sample(TailPhi{alpha, x}, piece), 1.0 / (2.0 * alpha), kInf);
}

}  // namespace

ExperimentReport phi_alpha_tail_experiment(const PhiAlphaConfig& cfg) {
  if (cfg.alphas.empty() || cfg.x_values.size() < 4)
    throw InvalidArgument("phi-alpha-tail needs alphas and at least 4 x values");
  for (double x : cfg.x_values)
    if (!(x > 2.0)) throw InvalidArgument("phi-alpha-tail needs every x > 2");
  for (double a : cfg.alphas)
    if (!(a > 0.0 && a < 0.5)) throw InvalidArgument("phi-alpha-tail needs 0 < alpha < 1/2");
  if (cfg.profile_ranges.size() < 2) throw InvalidArgument("need two profile ranges");

  const Grid piece = make_grid(1, 2.0, cfg.points, Sampling::half_cell);
  const Grid profile_piece = make_grid(1, 2.0, cfg.profile_points, Sampling::half_cell);
  const double widest = *std::max_element(cfg.profile_ranges.begin(), cfg.profile_ranges.end());
  const auto half_count = static_cast<long>(widest);

  ExperimentReport rep;
  rep.name = "phi-alpha-tail";
  rep.params = {{"alphas", cfg.alphas},
                {"x_values", cfg.x_values},
                {"points", cfg.points},
                {"profile_points", cfg.profile_points},
                {"profile_ranges", cfg.profile_ranges}};

  for (double alpha : cfg.alphas) {
    const std::string a = detail::tag(alpha);
    std::vector<double> g(cfg.x_values.size());
    parallel_for(g.size(), [&](std::size_t i) {
      g[i] = local_weak_norm(alpha, cfg.x_values[i], piece);
    });
    const DecayFit fit = fit_decay(cfg.x_values, g);
    rep.add(make_check("slope_alpha=" + a, fit.slope, -alpha, Provenance::paper, 0.05,
                       CheckMode::abs));

    // On [x-1, x+1] the rearrangement is phi(x - 1 + t) and t^{2 alpha} phi(x - 1 + t)
    // increases in t, so G(x) = 2^{2 alpha} phi(x + 1) <= 2^{2 alpha + 1} (x + 1)^{-alpha}.
    double worst_bound = 0.0;
    std::size_t increases = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double x = cfg.x_values[i];
      worst_bound = std::max(worst_bound,
                             g[i] / (std::pow(2.0, 2.0 * alpha + 1.0) * std::pow(x + 1.0, -alpha)));
      if (i > 0 && x > cfg.x_values[i - 1] && g[i] > g[i - 1] * (1.0 + 1e-12)) ++increases;
    }
    rep.add(make_check("tail_bound_ratio_alpha=" + a, worst_bound, 1.0, Provenance::derived, 0.0,
                       CheckMode::at_most));
    rep.add(make_check("monotone_violations_alpha=" + a, static_cast<double>(increases), 0.0,
                       Provenance::derived, 0.0, CheckMode::abs));

    // Membership in W(L^{1/(2 alpha), inf}, L^{1/alpha, inf}): the weak global norm
    // of the unit-lattice profile must settle as the range grows.
    std::vector<double> profile(static_cast<std::size_t>(2 * half_count + 1));
    parallel_for(profile.size(), [&](std::size_t i) {
      const double x = static_cast<double>(static_cast<long>(i) - half_count);
      profile[i] = local_weak_norm(alpha, x, profile_piece);
    });
    nlohmann::ordered_json membership = nlohmann::ordered_json::array();
    std::vector<double> weak_norms;
    for (double range : cfg.profile_ranges) {
      const auto k = static_cast<long>(range);
      const std::span<const double> window(profile.data() + (half_count - k),
                                           static_cast<std::size_t>(2 * k + 1));
      weak_norms.push_back(global_component_norm(window, 1.0, {1.0 / alpha, true}));
      membership.push_back({range, weak_norms.back()});
    }
    rep.add(make_check("membership_growth_alpha=" + a, weak_norms.back() / weak_norms.front(),
                       1.0, Provenance::derived, 0.05, CheckMode::at_most));

    nlohmann::ordered_json series = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.size(); ++i) series.push_back({cfg.x_values[i], g[i]});
    rep.diagnostics["G_alpha=" + a] = series;
    rep.diagnostics["fit_residual_alpha=" + a] = fit.residual;
    rep.diagnostics["membership_alpha=" + a] = membership;
  }
  return rep;
}

}  // namespace wam
