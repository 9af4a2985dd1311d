#include <algorithm>

#include "common.hpp"
#include "wam/bupu.hpp"
#include "wam/error.hpp"
#include "wam/experiments.hpp"

namespace wam {

BupuCheckConfig bupu_check_defaults(int dim) {
  BupuCheckConfig cfg;
  cfg.dim = dim;
  if (dim == 2) {
    cfg.extent = 16.0;
    cfg.points = 128;
  }
  return cfg;
}

ExperimentReport bupu_check_experiment(const BupuCheckConfig& cfg) {
  const Grid grid = make_grid(cfg.dim, cfg.extent, cfg.points);
  const Bupu b = build_bupu(grid, cfg.spacing);

  ExperimentReport rep;
  rep.name = "bupu-check";
  rep.params = {{"dim", cfg.dim},         {"extent", cfg.extent}, {"points", cfg.points},
                {"spacing", cfg.spacing}, {"c_values", cfg.c_values}, {"p", cfg.p}};

  double partition_err = 0.0, phi_min = kInf, phi_max = -kInf;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double sum = 0.0;
    for (const auto& phi : b.phis) {
      sum += phi[i].real();
      phi_min = std::min(phi_min, phi[i].real());
      phi_max = std::max(phi_max, phi[i].real());
    }
    partition_err = std::max(partition_err, std::abs(sum - 1.0));
  }
  rep.add(make_check("partition_of_unity_error", partition_err, 0.0, Provenance::trivial, 1e-12,
                     CheckMode::at_most));
  rep.add(make_check("phi_min", phi_min, 0.0, Provenance::trivial, 0.0, CheckMode::at_least));
  rep.add(make_check("phi_max", phi_max, 1.0, Provenance::trivial, 0.0, CheckMode::at_most));
  rep.add(make_check("max_overlap", static_cast<double>(max_overlap(b)),
                     std::pow(5.0, cfg.dim), Provenance::derived, 0.0, CheckMode::at_most));

  WindowSpec window;
  const AmalgamSpec spec = make_amalgam_spec(grid, {LocalTransform::fourier, 1.0}, {cfg.p}, window);
  double rs_err = 0.0, lo = kInf, hi = 0.0;
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (double c : cfg.c_values) {
    const GridFunction f = sample(Gaussian{c}, grid);
    const GridFunction back = synthesis_R(analysis_S(f, b), b);
    for (std::size_t i = 0; i < f.size(); ++i) rs_err = std::max(rs_err, std::abs(back[i] - f[i]));
    const double lattice = bupu_amalgam_norm(f, {LocalTransform::fourier, 1.0}, cfg.p, b);
    const double sliding = amalgam_norm(f, spec);
    const double ratio = lattice / sliding;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    table.push_back({{"c", c}, {"bupu_norm", lattice}, {"sliding_norm", sliding}, {"ratio", ratio}});
  }
  rep.add(make_check("rs_identity_error", rs_err, 0.0, Provenance::paper, 1e-12,
                     CheckMode::at_most));
  rep.add(make_check("min_norm_ratio", lo, 0.25, Provenance::derived, 0.0, CheckMode::at_least));
  rep.add(make_check("max_norm_ratio", hi, 4.0, Provenance::derived, 0.0, CheckMode::at_most));
  rep.diagnostics["norm_ratios"] = table;
  rep.diagnostics["translates"] = b.phis.size();
  return rep;
}

}  // namespace wam
