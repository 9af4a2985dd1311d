#include "common.hpp"
#include "wam/error.hpp"
#include "wam/experiments.hpp"

namespace wam {

ChirpNormConfig chirp_norm_defaults(int dim) {
  ChirpNormConfig cfg;
  cfg.dim = dim;
  if (dim == 2) {
    cfg.a_values = {1.0, 2.0};
    cfg.extent = 16.0;
    cfg.points = 512;
    cfg.tol = 0.03;
  }
  return cfg;
}

ExperimentReport verify_chirp_norm(const ChirpNormConfig& cfg) {
  if (cfg.a_values.empty()) throw InvalidArgument("chirp-norm needs at least one a");
  const Grid grid = make_grid(cfg.dim, cfg.extent, cfg.points);
  for (double a : cfg.a_values) check_chirp_sampling(grid, a);

  // Centers stay in the central half, away from the seam of the chirp phase.
  const AmalgamSpec spec = make_amalgam_spec(grid, {LocalTransform::fourier, 1.0}, {kInf}, {},
                                             LatticeRegion::central_half);
  const LocalNormEvaluator ev(grid, spec);

  ExperimentReport rep;
  rep.name = "chirp-norm";
  rep.params = {{"dim", cfg.dim},          {"a_values", cfg.a_values},
                {"extent", cfg.extent},    {"points", cfg.points},
                {"tol", cfg.tol},          {"lattice_step", spec.lattice_step},
                {"frame_points", ev.frame_points()}};
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (double a : cfg.a_values) {
    const double numeric = ev.norm(sample(Chirp{a}, grid));
    const double closed = detail::chirp_norm_closed_form(a, cfg.dim);
    rep.add(make_check("norm_a=" + detail::tag(a), numeric, closed, Provenance::paper, cfg.tol,
                       CheckMode::rel));
    table.push_back({{"a", a},
                     {"numeric", numeric},
                     {"closed_form", closed},
                     {"rel_err", std::abs(numeric - closed) / closed}});
  }
  rep.diagnostics["table"] = table;
  return rep;
}

}  // namespace wam
