#include "wam/bupu.hpp"

#include <cmath>

#include "wam/error.hpp"

namespace wam {
namespace {

// C-infinity step: 0 for u <= 0, 1 for u >= 1.
double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / u);
  const double b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

// 1 on [-inner, inner], 0 outside (-2 inner, 2 inner).
double plateau(double x, double inner) {
  return smooth_step((2.0 * inner - std::abs(x)) / inner);
}

// Signed periodic cell offset of node j from node a, in [-n/2, n/2).
long periodic_offset(std::size_t j, std::size_t a, std::size_t n) {
  long k = static_cast<long>((j + n - a) % n);
  if (k >= static_cast<long>(n / 2)) k -= static_cast<long>(n);
  return k;
}

GridFunction translate_profile(const Grid& grid, std::array<std::size_t, 2> center, double inner) {
  const std::size_t n = grid.points_per_dim();
  const double h = grid.spacing();
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto idx = grid.multi_index(i);
    double value = 1.0;
    for (int a = 0; a < grid.dim(); ++a)
      value *= plateau(static_cast<double>(periodic_offset(idx[a], center[a], n)) * h, inner);
    v[i] = value;
  }
  return GridFunction(grid, std::move(v));
}

bool supports_meet(const GridFunction& f, const GridFunction& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != cplx{} && g[i] != cplx{}) return true;
  }
  return false;
}

void check_family(const Bupu& b, std::size_t size) {
  if (size != b.phis.size()) throw InvalidArgument("family size does not match the partition");
}

}  // namespace

Bupu build_bupu(const Grid& grid, double spacing) {
  const double h = grid.spacing();
  const double ratio = std::round(spacing / h);
  if (!(spacing > 0.0) || ratio < 1.0 || std::abs(spacing - ratio * h) > 1e-9 * h)
    throw InvalidArgument("partition spacing must be a multiple of the grid spacing");
  const auto stride = static_cast<std::size_t>(ratio);
  const std::size_t n = grid.points_per_dim();
  if (n % stride != 0) throw InvalidArgument("partition spacing must divide the extent");
  if (2 * stride < 8) throw InvalidArgument("partition spacing too small: phi spans under 8 cells");
  if (n / stride < 4) throw InvalidArgument("partition spacing too large for the torus");

  Bupu b{grid, spacing, {}, {}, {}};
  std::vector<std::size_t> axis;
  for (std::size_t i = 0; i < n; i += stride) axis.push_back(i);
  if (grid.dim() == 1) {
    for (std::size_t i : axis) b.nodes.push_back({i, 0});
  } else {
    for (std::size_t i : axis)
      for (std::size_t j : axis) b.nodes.push_back({i, j});
  }

  std::vector<GridFunction> chis;
  std::vector<double> total(grid.size(), 0.0);
  for (const auto& c : b.nodes) {
    chis.push_back(translate_profile(grid, c, 0.5 * spacing));
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += chis.back()[i].real();
  }
  for (std::size_t k = 0; k < chis.size(); ++k) {
    std::vector<cplx> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = chis[k][i] / total[i];
    b.phis.emplace_back(grid, std::move(v));
    b.psis.push_back(translate_profile(grid, b.nodes[k], spacing));
  }
  return b;
}

std::size_t max_overlap(const Bupu& b) {
  std::size_t worst = 0;
  for (const auto& phi : b.phis) {
    std::size_t count = 0;
    for (const auto& psi : b.psis) count += supports_meet(phi, psi) ? 1 : 0;
    worst = std::max(worst, count);
  }
  return worst;
}

std::vector<GridFunction> analysis_S(const GridFunction& f, const Bupu& b) {
  if (!(f.grid() == b.grid)) throw InvalidArgument("function grid does not match the partition");
  std::vector<GridFunction> out;
  out.reserve(b.phis.size());
  for (const auto& phi : b.phis) out.push_back(multiply(f, phi));
  return out;
}

GridFunction synthesis_R(const std::vector<GridFunction>& u, const Bupu& b) {
  check_family(b, u.size());
  std::vector<cplx> acc(b.grid.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!(u[k].grid() == b.grid)) throw InvalidArgument("family grid does not match the partition");
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += u[k][i] * b.psis[k][i];
  }
  return GridFunction(b.grid, std::move(acc));
}

double bupu_amalgam_norm(const GridFunction& f, const LocalNormSpec& local, double p,
                         const Bupu& b) {
  const auto pieces = analysis_S(f, b);
  std::vector<double> norms;
  norms.reserve(pieces.size());
  std::vector<double> mags(f.size());
  for (const auto& piece : pieces) {
    double cell = b.grid.cell_volume();
    if (local.transform == LocalTransform::fourier) {
      const auto hat = fourier_transform(piece);
      for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(hat[i]);
      cell = hat.grid().cell_volume();
    } else {
      for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(piece[i]);
    }
    norms.push_back(local_component_norm(mags, cell, local));
  }
  return global_component_norm(norms, std::pow(b.spacing, b.grid.dim()), GlobalNormSpec{p, false});
}

}  // namespace wam
