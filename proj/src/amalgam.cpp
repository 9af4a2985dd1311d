#include "wam/amalgam.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "detail/fft.hpp"
#include "detail/power.hpp"
#include "detail/sum.hpp"
#include "wam/error.hpp"
#include "wam/lorentz.hpp"
#include "wam/parallel.hpp"

namespace wam {
namespace {

bool is_smooth_size(std::size_t m) {
  for (std::size_t p : {2u, 3u, 5u, 7u}) {
    while (m % p == 0) m /= p;
  }
  return m == 1;
}

std::size_t frame_size(const Grid& grid, const WindowSpec& window) {
  const double r = window_radius(window, grid.dim());
  const double cells = std::ceil(r / grid.spacing() - 1e-9);
  const std::size_t n = grid.points_per_dim();
  if (2.0 * cells + 2.0 > static_cast<double>(n))
    throw InvalidArgument("window mass outside the grid exceeds the truncation tolerance");
  std::size_t m = 2 * static_cast<std::size_t>(cells) + 2;
  while (!is_smooth_size(m)) m += 2;
  return std::min(m, n);
}

// Integer ratio a / b, or 0 when a is not a multiple of b.
std::size_t integer_ratio(double a, double b) {
  const double k = std::round(a / b);
  if (k < 1.0 || std::abs(a - k * b) > 1e-9 * b) return 0;
  return static_cast<std::size_t>(k);
}

double power_sum_norm(std::span<const double> values, double cell, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, v);
    return m;
  }
  std::vector<double> powers(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) powers[i] = detail::power(values[i], p);
  return std::pow(detail::pairwise_sum(powers) * cell, 1.0 / p);
}

void check_local(const LocalNormSpec& local) {
  if (!(local.p >= 1.0)) throw InvalidArgument("local exponent must be >= 1");
  if (local.lorentz_q) {
    if (!(local.p > 1.0) || std::isinf(local.p))
      throw InvalidArgument("Lorentz local exponent p must lie in (1, inf)");
    if (!(*local.lorentz_q >= 1.0)) throw InvalidArgument("Lorentz local exponent q must be >= 1");
  }
}

void check_global(const GlobalNormSpec& global) {
  if (!(global.p >= 1.0)) throw InvalidArgument("global exponent must be >= 1");
  if (global.weak && (!(global.p > 1.0) || std::isinf(global.p)))
    throw InvalidArgument("weak global exponent must lie in (1, inf)");
}

}  // namespace

double default_lattice_step(const Grid& grid, const WindowSpec& window) {
  const double h = grid.spacing();
  const double target = std::min(window_effective_width(window) / 4.0, 8.0 * h);
  double step = h;
  while (2.0 * step <= target * (1.0 + 1e-12) &&
         integer_ratio(grid.extent(), 2.0 * step) != 0)
    step *= 2.0;
  return step;
}

AmalgamSpec make_amalgam_spec(const Grid& grid, LocalNormSpec local, GlobalNormSpec global,
                              WindowSpec window, LatticeRegion region) {
  AmalgamSpec spec{window, default_lattice_step(grid, window), local, global, region};
  validate(spec, grid);
  return spec;
}

void validate(const AmalgamSpec& spec, const Grid& grid) {
  check_local(spec.local);
  check_global(spec.global);
  const std::size_t stride = integer_ratio(spec.lattice_step, grid.spacing());
  if (stride == 0) throw InvalidArgument("lattice step must be a multiple of the grid spacing");
  if (grid.points_per_dim() % stride != 0)
    throw InvalidArgument("lattice step must divide the grid extent");
  if (spec.lattice_step > 0.25 * window_effective_width(spec.window) * (1.0 + 1e-12))
    throw InvalidArgument("lattice step exceeds a quarter of the window width");
  frame_size(grid, spec.window);
}

double local_component_norm(std::span<const double> magnitudes, double cell,
                            const LocalNormSpec& local) {
  check_local(local);
  if (local.lorentz_q) {
    const auto r = rearrange(std::vector<double>(magnitudes.begin(), magnitudes.end()), cell);
    return lorentz_quasinorm(r, local.p, *local.lorentz_q);
  }
  return power_sum_norm(magnitudes, cell, local.p);
}

double global_component_norm(std::span<const double> values, double cell,
                             const GlobalNormSpec& global) {
  check_global(global);
  if (global.weak) {
    const auto r = rearrange(std::vector<double>(values.begin(), values.end()), cell);
    return lorentz_quasinorm(r, global.p, kInf);
  }
  return power_sum_norm(values, cell, global.p);
}

LocalNormEvaluator::LocalNormEvaluator(const Grid& grid, const AmalgamSpec& spec)
    : grid_(grid), spec_(spec) {
  validate(spec_, grid_);
  stride_ = integer_ratio(spec_.lattice_step, grid_.spacing());
  frame_n_ = frame_size(grid_, spec_.window);

  const int d = grid_.dim();
  const std::size_t m = frame_n_;
  const double h = grid_.spacing();
  const std::size_t frame_total = d == 1 ? m : m * m;
  window_frame_.resize(frame_total);
  for (std::size_t i = 0; i < frame_total; ++i) {
    std::array<double, 2> x{};
    const std::size_t idx[2] = {d == 1 ? i : i / m, i % m};
    for (int a = 0; a < d; ++a)
      x[a] = (static_cast<double>(idx[a]) - static_cast<double>(m / 2)) * h;
    window_frame_[i] = window_value(spec_.window, std::span<const double>(x.data(), d));
  }

  const std::size_t n = grid_.points_per_dim();
  const double quarter = 0.25 * grid_.extent();
  std::vector<std::size_t> axis;
  for (std::size_t i = 0; i < n; i += stride_) {
    if (spec_.region == LatticeRegion::central_half && !(std::abs(grid_.coordinate(i)) < quarter))
      continue;
    axis.push_back(i);
  }
  if (axis.empty()) throw InvalidArgument("no lattice centers in the requested region");
  if (d == 1) {
    for (std::size_t i : axis) centers_.push_back({i, 0});
  } else {
    for (std::size_t i : axis)
      for (std::size_t j : axis) centers_.push_back({i, j});
  }
}

double LocalNormEvaluator::evaluate(const GridFunction& f,
                                    std::array<std::size_t, 2> center) const {
  if (!(f.grid() == grid_)) throw InvalidArgument("function grid does not match the evaluator");
  const int d = grid_.dim();
  const std::size_t n = grid_.points_per_dim();
  const std::size_t m = frame_n_;
  const std::size_t total = window_frame_.size();
  const auto values = f.values();

  // Grid index of frame position k along one axis.
  auto wrap = [&](std::size_t c, std::size_t k) { return (c + n + k - m / 2) % n; };

  thread_local std::vector<cplx> buf;
  thread_local std::vector<double> mags;
  buf.resize(total);
  mags.resize(total);
  bool nonzero = false;
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t flat;
    if (d == 1) {
      flat = wrap(center[0], i);
    } else {
      flat = wrap(center[0], i / m) * n + wrap(center[1], i % m);
    }
    buf[i] = values[flat] * window_frame_[i];
    nonzero = nonzero || buf[i] != cplx{};
  }
  if (!nonzero) return 0.0;

  double cell = grid_.cell_volume();
  if (spec_.local.transform == LocalTransform::fourier) {
    detail::dft(buf, d, m, -1);
    const double hd = grid_.cell_volume();
    for (auto& v : buf) v *= hd;
    cell = std::pow(1.0 / (static_cast<double>(m) * grid_.spacing()), d);
  }
  for (std::size_t i = 0; i < total; ++i) mags[i] = std::sqrt(std::norm(buf[i]));
  return local_component_norm(mags, cell, spec_.local);
}

std::vector<double> LocalNormEvaluator::profile(const GridFunction& f,
                                                LatticeSymmetry symmetry) const {
  std::vector<double> out(centers_.size());
  if (symmetry == LatticeSymmetry::none) {
    parallel_for(centers_.size(), [&](std::size_t i) { out[i] = evaluate(f, centers_[i]); });
    return out;
  }
  if (grid_.sampling() != Sampling::nodes)
    throw InvalidArgument("reflection symmetry needs node sampling");
  check_reflection_symmetry(f);

  // Orbit key: fold each index under i -> N - i, then sort the pair.
  const std::size_t n = grid_.points_per_dim();
  auto fold = [n](std::size_t i) { return std::min(i, (n - i) % n); };
  std::map<std::array<std::size_t, 2>, std::size_t> orbit_of;
  std::vector<std::array<std::size_t, 2>> reps;
  std::vector<std::size_t> slot(centers_.size());
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    std::array<std::size_t, 2> key{fold(centers_[i][0]), fold(centers_[i][1])};
    if (key[0] > key[1]) std::swap(key[0], key[1]);
    auto [it, inserted] = orbit_of.emplace(key, reps.size());
    if (inserted) reps.push_back(centers_[i]);
    slot[i] = it->second;
  }
  std::vector<double> rep_values(reps.size());
  parallel_for(reps.size(), [&](std::size_t k) { rep_values[k] = evaluate(f, reps[k]); });
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rep_values[slot[i]];
  return out;
}

void LocalNormEvaluator::check_reflection_symmetry(const GridFunction& f) const {
  const std::size_t n = grid_.points_per_dim();
  double scale_ref = 0.0, worst = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto idx = grid_.multi_index(i);
    const std::size_t ri = (n - idx[0]) % n;
    const std::size_t rj = grid_.dim() == 1 ? 0 : (n - idx[1]) % n;
    scale_ref = std::max(scale_ref, std::abs(f[i]));
    worst = std::max(worst, std::abs(f[i] - f[grid_.flat_index({ri, idx[1]})]));
    if (grid_.dim() == 2) {
      worst = std::max(worst, std::abs(f[i] - f[grid_.flat_index({idx[0], rj})]));
      worst = std::max(worst, std::abs(f[i] - f[grid_.flat_index({idx[1], idx[0]})]));
    }
  }
  if (worst > 1e-12 * scale_ref)
    throw InvalidArgument("function lacks the reflection symmetry requested for its profile");
}

double LocalNormEvaluator::norm(const GridFunction& f, LatticeSymmetry symmetry) const {
  const auto prof = profile(f, symmetry);
  return global_component_norm(prof, std::pow(spec_.lattice_step, grid_.dim()), spec_.global);
}

double local_norm(const GridFunction& f, std::array<double, 2> center, const AmalgamSpec& spec) {
  const Grid& grid = f.grid();
  LocalNormEvaluator ev(grid, spec);
  std::array<std::size_t, 2> idx{0, 0};
  for (int a = 0; a < grid.dim(); ++a) {
    const double pos = (center[a] + 0.5 * grid.extent()) / grid.spacing() - grid.shift();
    const double k = std::round(pos);
    const auto n = static_cast<double>(grid.points_per_dim());
    if (std::abs(pos - k) > 1e-9 || k < 0.0 || k >= n ||
        static_cast<std::size_t>(k) % ev.lattice_stride() != 0)
      throw InvalidArgument("center is not a lattice point");
    idx[a] = static_cast<std::size_t>(k);
  }
  return ev.evaluate(f, idx);
}

double amalgam_norm(const GridFunction& f, const AmalgamSpec& spec) {
  return LocalNormEvaluator(f.grid(), spec).norm(f);
}

namespace {

struct TimeLattice {
  std::size_t stride;
  long first;  // index of the first center in units of time_step
  long last;
  long reach;  // window radius in samples
};

TimeLattice time_lattice(std::size_t samples, double dt, double q1, const WindowSpec& window,
                         double time_step) {
  if (samples == 0) throw InvalidArgument("empty trajectory");
  if (!(dt > 0.0)) throw InvalidArgument("time step dt must be positive");
  if (!(q1 >= 1.0)) throw InvalidArgument("time exponent must be >= 1");
  const std::size_t stride = integer_ratio(time_step, dt);
  if (stride == 0) throw InvalidArgument("time lattice step must be a multiple of dt");
  const double r = window_radius(window, 1);
  const long reach = static_cast<long>(std::ceil(r / dt - 1e-9));
  const long margin = static_cast<long>(std::ceil(r / time_step - 1e-9));
  const long last = static_cast<long>((samples - 1) / stride) + margin;
  return {stride, -margin, last, reach};
}

}  // namespace

std::vector<double> time_local_profile(std::span<const double> values, double dt, double q1,
                                       const WindowSpec& window, double time_step) {
  const TimeLattice lat = time_lattice(values.size(), dt, q1, window, time_step);
  const long k_max = static_cast<long>(values.size()) - 1;
  std::vector<double> out;
  std::vector<double> mags;
  for (long j = lat.first; j <= lat.last; ++j) {
    const long center = j * static_cast<long>(lat.stride);
    mags.clear();
    for (long k = std::max(0L, center - lat.reach); k <= std::min(k_max, center + lat.reach); ++k) {
      const double t = static_cast<double>(k - center) * dt;
      mags.push_back(std::abs(values[k]) * window_value(window, std::span<const double>(&t, 1)));
    }
    out.push_back(power_sum_norm(mags, dt, q1));
  }
  return out;
}

double mixed_time_norm(std::span<const double> values, double dt, double q1, double q2,
                       const WindowSpec& window, double time_step) {
  if (!(q2 >= 1.0)) throw InvalidArgument("time exponent must be >= 1");
  const auto prof = time_local_profile(values, dt, q1, window, time_step);
  return power_sum_norm(prof, time_step, q2);
}

double space_time_norm(std::span<const GridFunction> states, double dt, const AmalgamSpec& space,
                       double q1, double q2, const WindowSpec& time_window, double time_step) {
  if (states.empty()) throw InvalidArgument("empty trajectory");
  LocalNormEvaluator ev(states.front().grid(), space);
  std::vector<double> norms(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) norms[k] = ev.norm(states[k]);
  return mixed_time_norm(norms, dt, q1, q2, time_window, time_step);
}

double space_time_norm_iterated(std::span<const GridFunction> states, double dt,
                                const AmalgamSpec& space, double q1, double q2,
                                const WindowSpec& time_window, double time_step) {
  if (!(q2 >= 1.0)) throw InvalidArgument("time exponent must be >= 1");
  const TimeLattice lat = time_lattice(states.size(), dt, q1, time_window, time_step);
  LocalNormEvaluator ev(states.front().grid(), space);
  const long k_max = static_cast<long>(states.size()) - 1;
  std::vector<double> prof;
  std::vector<double> mags;
  for (long j = lat.first; j <= lat.last; ++j) {
    const long center = j * static_cast<long>(lat.stride);
    mags.clear();
    for (long k = std::max(0L, center - lat.reach); k <= std::min(k_max, center + lat.reach); ++k) {
      const double t = static_cast<double>(k - center) * dt;
      const double g = window_value(time_window, std::span<const double>(&t, 1));
      mags.push_back(ev.norm(scale(states[k], g)));
    }
    prof.push_back(power_sum_norm(mags, dt, q1));
  }
  return power_sum_norm(prof, time_step, q2);
}

}  // namespace wam
