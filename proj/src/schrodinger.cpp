#include "wam/schrodinger.hpp"

#include <cmath>
#include <numbers>

#include "wam/error.hpp"
#include "wam/parallel.hpp"

namespace wam {
namespace {

constexpr double kPi = std::numbers::pi;

// e^{-4 pi^2 i t |xi|^2} applied to samples on the frequency grid.
std::vector<cplx> apply_free_multiplier(const GridFunction& hat, double t) {
  const Grid& g = hat.grid();
  std::vector<cplx> v(hat.values().begin(), hat.values().end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto xi = g.point(i);
    const double r2 = xi[0] * xi[0] + xi[1] * xi[1];
    v[i] *= std::polar(1.0, -4.0 * kPi * kPi * t * r2);
  }
  return v;
}

GridFunction free_step(const GridFunction& u, double t) {
  const GridFunction hat = fourier_transform(u);
  return inverse_fourier_transform(GridFunction(hat.grid(), apply_free_multiplier(hat, t)));
}

GridFunction potential_phase(const GridFunction& u, const PotentialSpec& v, double t,
                             double duration) {
  const Grid& g = u.grid();
  std::vector<cplx> out(u.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto x = g.point(i);
    const double value = v.evaluator(t, std::span<const double>(x.data(), g.dim()));
    if (!std::isfinite(value)) throw NumericalError("potential is not finite at a grid node");
    out[i] = u[i] * std::polar(1.0, -value * duration);
  }
  return GridFunction(g, std::move(out));
}

}  // namespace

void check_potential_class(const PotentialSpec& v, int dim) {
  if (!v.evaluator) throw InvalidArgument("potential has no evaluator");
  if (!(v.p > dim)) throw InvalidArgument("potential class needs p > d");
  if (!(v.alpha >= 1.0)) throw InvalidArgument("potential class needs alpha >= 1");
  if (1.0 / v.alpha + dim / v.p > 1.0 + 1e-12)
    throw InvalidArgument("potential class needs 1/alpha + d/p <= 1");
}

GridFunction propagate(const GridFunction& u0, double t) {
  if (t == 0.0) return u0;
  return free_step(u0, t);
}

Trajectory propagate_many(const GridFunction& u0, std::span<const double> times) {
  const GridFunction hat = fourier_transform(u0);
  std::vector<std::vector<cplx>> results(times.size());
  parallel_for(times.size(), [&](std::size_t k) {
    if (times[k] == 0.0) {
      results[k].assign(u0.values().begin(), u0.values().end());
      return;
    }
    GridFunction h(hat.grid(), apply_free_multiplier(hat, times[k]));
    results[k] = std::move(inverse_fourier_transform(h)).release();
  });
  Trajectory tr;
  tr.times.assign(times.begin(), times.end());
  for (auto& r : results) tr.states.emplace_back(u0.grid(), std::move(r));
  return tr;
}

GridFunction kernel(double t, const Grid& grid) {
  if (t == 0.0) throw InvalidArgument("kernel needs t != 0");
  const double a = 4.0 * kPi * t;
  check_chirp_sampling(grid, a);
  return sample(Chirp{a}, grid);
}

GridFunction evolved_gaussian_closed_form(cplx c, double t, const Grid& grid) {
  if (!(c.real() > 0.0)) throw InvalidArgument("evolved gaussian needs Re c > 0");
  return sample(EvolvedGaussian{c, t}, grid);
}

Trajectory split_step_solve(const GridFunction& u0, const PotentialSpec& v, double T, double dt,
                            std::size_t record_stride) {
  if (!v.evaluator) throw InvalidArgument("potential has no evaluator");
  if (!(dt > 0.0) || !(T >= 0.0)) throw InvalidArgument("split step needs dt > 0 and T >= 0");
  const double steps_real = std::round(T / dt);
  if (std::abs(steps_real * dt - T) > 1e-9 * std::max(1.0, T))
    throw InvalidArgument("T must be an integer multiple of dt");
  if (record_stride == 0) throw InvalidArgument("record stride must be positive");
  const auto steps = static_cast<std::size_t>(steps_real);

  Trajectory tr;
  tr.times.push_back(0.0);
  tr.states.push_back(u0);
  GridFunction u = u0;
  for (std::size_t n = 0; n < steps; ++n) {
    const double t0 = static_cast<double>(n) * dt;
    const double t1 = static_cast<double>(n + 1) * dt;
    u = potential_phase(u, v, t0, 0.5 * dt);
    u = free_step(u, dt);
    u = potential_phase(u, v, t1, 0.5 * dt);
    if ((n + 1) % record_stride == 0 || n + 1 == steps) {
      tr.times.push_back(t1);
      tr.states.push_back(u);
    }
  }
  return tr;
}

}  // namespace wam
