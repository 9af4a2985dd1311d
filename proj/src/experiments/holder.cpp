#include <algorithm>
#include <random>

#include "common.hpp"
#include "wam/error.hpp"
#include "wam/experiments.hpp"

namespace wam {
namespace {

// Samples with spectrum on the central quarter of the frequency grid,
// complex standard normal coefficients.
GridFunction band_limited(const Grid& grid, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const Grid dual = grid.dual();
  const std::size_t n = grid.points_per_dim();
  std::vector<cplx> spec(dual.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto idx = dual.multi_index(i);
    bool inside = true;
    for (int a = 0; a < grid.dim(); ++a)
      inside = inside && idx[a] >= 3 * n / 8 && idx[a] < 5 * n / 8;
    const double re = normal(rng);
    const double im = normal(rng);
    if (inside) spec[i] = {re, im};
  }
  return inverse_fourier_transform(GridFunction(dual, std::move(spec)));
}

std::vector<GridFunction> random_field(const Grid& grid, std::size_t samples,
                                       std::mt19937_64& rng) {
  std::vector<GridFunction> out;
  for (std::size_t k = 0; k < samples; ++k) out.push_back(band_limited(grid, rng));
  return out;
}

double conjugate(double p) { return std::isinf(p) ? 1.0 : (p == 1.0 ? kInf : p / (p - 1.0)); }

}  // namespace

ExperimentReport holder_duality_experiment(const HolderConfig& cfg) {
  if (cfg.n_samples < 1) throw InvalidArgument("holder needs n_samples >= 1");
  if (cfg.time_samples < 2) throw InvalidArgument("holder needs at least 2 time samples");
  const Grid grid = make_grid(1, cfg.extent, cfg.points);
  const double s_c = conjugate(cfg.s), q_c = conjugate(cfg.q), r_c = conjugate(cfg.r);

  // Both windows have unit L^2 norm: then sum_y g(x - y)^2 * step = 1 up to the
  // lattice aliasing error, and the pairing splits into windowed pieces.
  WindowSpec window;
  window.normalization = WindowNormalization::unit_l2;
  const AmalgamSpec f_space = make_amalgam_spec(grid, {LocalTransform::fourier, r_c}, {cfg.r}, window);
  const AmalgamSpec g_space = make_amalgam_spec(grid, {LocalTransform::fourier, cfg.r}, {r_c}, window);

  auto norm_f = [&](const std::vector<GridFunction>& F) {
    return space_time_norm(F, cfg.dt, f_space, cfg.s, cfg.q, window, cfg.time_step);
  };
  auto norm_g = [&](const std::vector<GridFunction>& G) {
    return space_time_norm(G, cfg.dt, g_space, s_c, q_c, window, cfg.time_step);
  };
  auto pairing = [&](const std::vector<GridFunction>& F, const std::vector<GridFunction>& G) {
    cplx sum{};
    for (std::size_t k = 0; k < F.size(); ++k) sum += inner_product(F[k], G[k]);
    return std::abs(sum) * cfg.dt;
  };

  std::mt19937_64 rng(cfg.seed);
  double worst = 0.0;
  std::vector<double> ratios;
  std::vector<GridFunction> first;
  for (std::size_t i = 0; i < cfg.n_samples; ++i) {
    auto F = random_field(grid, cfg.time_samples, rng);
    auto G = random_field(grid, cfg.time_samples, rng);
    const double ratio = pairing(F, G) / (norm_f(F) * norm_g(G));
    ratios.push_back(ratio);
    worst = std::max(worst, ratio);
    if (i == 0) first = std::move(F);
  }

  ExperimentReport rep;
  rep.name = "holder";
  rep.params = {{"n_samples", cfg.n_samples}, {"seed", cfg.seed},
                {"s", cfg.s},                 {"q", cfg.q},
                {"r", cfg.r},                 {"extent", cfg.extent},
                {"points", cfg.points},       {"time_samples", cfg.time_samples},
                {"dt", cfg.dt},               {"time_step", cfg.time_step}};
  rep.add(make_check("max_pair_ratio", worst, 1.05, Provenance::derived, 0.0, CheckMode::at_most));

  // F paired with itself, normalized: <F,F> / (||F|| ||F||_dual).
  const double self = pairing(first, first) / (norm_f(first) * norm_g(first));
  rep.add(make_check("self_pair_ratio", self, 1.05, Provenance::derived, 0.0, CheckMode::at_most));
  std::vector<GridFunction> zero(cfg.time_samples, GridFunction(grid));
  rep.add(make_check("zero_pair", pairing(first, zero), 0.0, Provenance::trivial, 0.0,
                     CheckMode::abs));

  // Pointwise control: |f(x)| g(0) <= ||(f T_x g)^||_{L^1} with the unit-peak window.
  const AmalgamSpec fl1 = make_amalgam_spec(grid, {LocalTransform::fourier, 1.0}, {kInf});
  std::vector<GridFunction> corpus;
  for (double c : {0.25, 0.5, 1.0, 2.0}) corpus.push_back(sample(Gaussian{c}, grid));
  for (double a : {2.0, 4.0, 8.0}) {
    check_chirp_sampling(grid, a);
    corpus.push_back(sample(Chirp{a}, grid));
  }
  for (std::size_t k = 0; k < 4; ++k) corpus.push_back(first[k]);
  double worst_embed = 0.0;
  for (const auto& f : corpus) {
    const double spec_norm = amalgam_norm(f, fl1);
    worst_embed = std::max(worst_embed, lp_norm(f, kInf) / spec_norm);
  }
  rep.add(make_check("pointwise_embedding_ratio", worst_embed, 1.02, Provenance::derived, 0.0,
                     CheckMode::at_most));

  rep.diagnostics["ratios"] = ratios;
  return rep;
}

}  // namespace wam
