#include "wam/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "detail/fft.hpp"
#include "detail/sum.hpp"
#include "wam/error.hpp"

namespace wam {
namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

cplx cis(double phase) { return {std::cos(phase), std::sin(phase)}; }

// Per-axis phase factors of the centered transform; see fourier_transform.
struct AxisPhases {
  std::vector<cplx> pre;
  std::vector<cplx> post;
};

AxisPhases axis_phases(std::size_t n, double s, double s_dual) {
  AxisPhases ph{std::vector<cplx>(n), std::vector<cplx>(n)};
  const double nn = static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double jd = static_cast<double>(j);
    // e^{i pi j} e^{-2 pi i j s'/N}; reduce j mod 2 to keep the argument small
    ph.pre[j] = ((j & 1U) ? -1.0 : 1.0) * cis(-2.0 * kPi * jd * s_dual / nn);
    ph.post[j] = ((j & 1U) ? -1.0 : 1.0) * cis(kPi * s_dual - 2.0 * kPi * s * jd / nn -
                                               2.0 * kPi * s * s_dual / nn + kPi * s);
  }
  return ph;
}

void apply_axis_factors(std::vector<cplx>& v, int dim, std::size_t n,
                        const std::vector<cplx>& factor, bool conjugate, double scale) {
  auto f = [&](std::size_t i) { return conjugate ? std::conj(factor[i]) : factor[i]; };
  if (dim == 1) {
    for (std::size_t i = 0; i < n; ++i) v[i] *= f(i) * scale;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const cplx fi = f(i) * scale;
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] *= fi * f(j);
    }
  }
}

}  // namespace

Grid::Grid(int dim, double extent, std::size_t n, Sampling sampling)
    : Grid(dim, extent, n, sampling == Sampling::half_cell ? 0.5 : 0.0, 0.0) {}

Grid::Grid(int dim, double extent, std::size_t n, double shift, double dual_shift)
    : dim_(dim), extent_(extent), n_(n), shift_(shift), dual_shift_(dual_shift) {
  if (dim != 1 && dim != 2) throw InvalidArgument("grid dimension must be 1 or 2");
  if (!(extent > 0.0) || !std::isfinite(extent))
    throw InvalidArgument("grid extent must be positive");
  if (n < 8 || !is_power_of_two(n))
    throw InvalidArgument("points per dimension must be a power of two >= 8, got " +
                          std::to_string(n));
  // 2^24 complex samples is 256 MiB per function; larger grids are configuration mistakes.
  if (size() > (std::size_t{1} << 24))
    throw InvalidArgument("grid of " + std::to_string(n) + " points per axis in d=" +
                          std::to_string(dim) + " exceeds 2^24 samples");
}

double Grid::cell_volume() const {
  const double h = spacing();
  return dim_ == 1 ? h : h * h;
}

std::array<std::size_t, 2> Grid::multi_index(std::size_t flat) const {
  if (dim_ == 1) return {flat, 0};
  return {flat / n_, flat % n_};
}

std::array<double, 2> Grid::point(std::size_t flat) const {
  const auto idx = multi_index(flat);
  return {coordinate(idx[0]), dim_ == 1 ? 0.0 : coordinate(idx[1])};
}

Grid Grid::dual() const {
  return Grid(dim_, static_cast<double>(n_) / extent_, n_, dual_shift_, shift_);
}

Grid make_grid(int dim, double extent, std::size_t points_per_dim, Sampling sampling) {
  return Grid(dim, extent, points_per_dim, sampling);
}

GridFunction::GridFunction(Grid grid) : grid_(grid), values_(grid.size(), cplx{}) {}

GridFunction::GridFunction(Grid grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw InvalidArgument("grid function has " + std::to_string(values_.size()) +
                          " samples, grid needs " + std::to_string(grid_.size()));
  for (const cplx& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericalError("non-finite sample in grid function");
  }
}

GridFunction scale(const GridFunction& f, cplx c) {
  std::vector<cplx> v(f.values().begin(), f.values().end());
  for (auto& x : v) x *= c;
  return GridFunction(f.grid(), std::move(v));
}

GridFunction multiply(const GridFunction& f, const GridFunction& g) {
  if (!(f.grid() == g.grid())) throw InvalidArgument("multiply: grid mismatch");
  std::vector<cplx> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] * g[i];
  return GridFunction(f.grid(), std::move(v));
}

GridFunction add(const GridFunction& f, const GridFunction& g) {
  if (!(f.grid() == g.grid())) throw InvalidArgument("add: grid mismatch");
  std::vector<cplx> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] + g[i];
  return GridFunction(f.grid(), std::move(v));
}

cplx evaluate(const AnalyticFunction& f, std::span<const double> x) {
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  const double d = static_cast<double>(x.size());
  return std::visit(
      [&](const auto& fn) -> cplx {
        using T = std::decay_t<decltype(fn)>;
        if constexpr (std::is_same_v<T, Gaussian>) {
          return std::exp(-kPi * r2 / fn.c);
        } else if constexpr (std::is_same_v<T, Chirp>) {
          const cplx ai{0.0, fn.a};
          return std::pow(std::sqrt(ai), -d) * std::exp(-kPi * r2 / ai);
        } else if constexpr (std::is_same_v<T, TailPhi>) {
          const double t = std::abs(x[0] + fn.shift);
          return std::pow(t, -fn.alpha) + std::pow(t, -2.0 * fn.alpha);
        } else if constexpr (std::is_same_v<T, Indicator>) {
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (std::abs(x[i] - fn.center[i]) > fn.half_width[i]) return 0.0;
          }
          return 1.0;
        } else {
          const cplx ct = fn.c + cplx{0.0, 4.0 * kPi * fn.t};
          return std::pow(std::sqrt(fn.c) / std::sqrt(ct), d) * std::exp(-kPi * r2 / ct);
        }
      },
      f);
}

GridFunction sample(const AnalyticFunction& f, const Grid& grid) {
  if (const auto* tp = std::get_if<TailPhi>(&f)) {
    if (grid.dim() != 1) throw InvalidArgument("tail_phi is one-dimensional");
    if (!(tp->alpha > 0.0 && tp->alpha < 0.5))
      throw InvalidArgument("tail_phi needs 0 < alpha < 1/2");
    const double h = grid.spacing();
    for (std::size_t j = 0; j < grid.points_per_dim(); ++j) {
      if (std::abs(grid.coordinate(j) + tp->shift) < 0.5 * h * (1.0 - 1e-9))
        throw InvalidArgument("tail_phi sampled within half a cell of its singularity");
    }
  }
  if (const auto* g = std::get_if<Gaussian>(&f)) {
    if (g->c.real() < 0.0 || g->c == cplx{})
      throw InvalidArgument("gaussian needs Re c >= 0 and c != 0");
  }
  if (const auto* ch = std::get_if<Chirp>(&f); ch && ch->a == 0.0)
    throw InvalidArgument("chirp needs a != 0");
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto p = grid.point(i);
    v[i] = evaluate(f, std::span<const double>(p.data(), grid.dim()));
  }
  return GridFunction(grid, std::move(v));
}

void check_chirp_sampling(const Grid& grid, double a) {
  const double L = grid.extent();
  const double needed = 2.0 * L * L / std::abs(a);
  if (static_cast<double>(grid.points_per_dim()) < needed)
    throw NumericalError("chirp with a=" + std::to_string(a) + " aliases: need N >= " +
                         std::to_string(needed) + ", have " +
                         std::to_string(grid.points_per_dim()));
}

// With x_j = -L/2 + (j+s) h and w_k = -N/(2L) + (k+s')/L,
// e^{-2 pi i x_j w_k} = e^{i pi (k+s')} e^{i pi (j+s)} e^{-2 pi i (j+s)(k+s')/N}
// (the constant e^{-i pi N/2} is 1 for N >= 8), which splits into a pre-phase
// on j, an FFT, and a post-phase on k.
GridFunction fourier_transform(const GridFunction& f) {
  const Grid& g = f.grid();
  const std::size_t n = g.points_per_dim();
  const AxisPhases ph = axis_phases(n, g.shift(), g.dual_shift());
  std::vector<cplx> v(f.values().begin(), f.values().end());
  apply_axis_factors(v, g.dim(), n, ph.pre, false, 1.0);
  detail::dft(v, g.dim(), n, -1);
  apply_axis_factors(v, g.dim(), n, ph.post, false, g.cell_volume());
  return GridFunction(g.dual(), std::move(v));
}

GridFunction inverse_fourier_transform(const GridFunction& fhat) {
  const Grid target = fhat.grid().dual();
  const std::size_t n = target.points_per_dim();
  const AxisPhases ph = axis_phases(n, target.shift(), target.dual_shift());
  std::vector<cplx> v(fhat.values().begin(), fhat.values().end());
  apply_axis_factors(v, target.dim(), n, ph.post, true, 1.0);
  detail::dft(v, target.dim(), n, +1);
  const double inv_L = 1.0 / target.extent();
  apply_axis_factors(v, target.dim(), n, ph.pre, true, target.dim() == 1 ? inv_L : inv_L * inv_L);
  return GridFunction(target, std::move(v));
}

double lp_norm(const GridFunction& f, double p) {
  if (!(p >= 1.0)) throw InvalidArgument("lp_norm needs p >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& v : f.values()) m = std::max(m, std::abs(v));
    return m;
  }
  std::vector<double> terms(f.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = p == 2.0 ? std::norm(f[i]) : std::pow(std::abs(f[i]), p);
  }
  return std::pow(detail::pairwise_sum(terms) * f.grid().cell_volume(), 1.0 / p);
}

cplx inner_product(const GridFunction& f, const GridFunction& g) {
  if (!(f.grid() == g.grid())) throw InvalidArgument("inner_product: grid mismatch");
  std::vector<double> re(f.size()), im(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const cplx z = f[i] * std::conj(g[i]);
    re[i] = z.real();
    im[i] = z.imag();
  }
  const double cell = f.grid().cell_volume();
  return {detail::pairwise_sum(re) * cell, detail::pairwise_sum(im) * cell};
}

GridFunction translate(const GridFunction& f, std::array<long, 2> shift) {
  const Grid& g = f.grid();
  const long n = static_cast<long>(g.points_per_dim());
  auto wrap = [n](long i) { return static_cast<std::size_t>(((i % n) + n) % n); };
  std::vector<cplx> v(f.size());
  if (g.dim() == 1) {
    for (long j = 0; j < n; ++j) v[wrap(j + shift[0])] = f[static_cast<std::size_t>(j)];
  } else {
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        v[wrap(i + shift[0]) * static_cast<std::size_t>(n) + wrap(j + shift[1])] =
            f[static_cast<std::size_t>(i * n + j)];
  }
  return GridFunction(g, std::move(v));
}

GridFunction modulate(const GridFunction& f, std::array<long, 2> freq) {
  const Grid& g = f.grid();
  std::vector<cplx> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto x = g.point(i);
    double phase = x[0] * static_cast<double>(freq[0]);
    if (g.dim() == 2) phase += x[1] * static_cast<double>(freq[1]);
    v[i] = f[i] * cis(2.0 * kPi * phase / g.extent());
  }
  return GridFunction(g, std::move(v));
}

double mass_outside_box(const GridFunction& f, double half_width) {
  const Grid& g = f.grid();
  std::vector<double> all(f.size()), outside(f.size(), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    all[i] = std::norm(f[i]);
    const auto x = g.point(i);
    const bool out = std::abs(x[0]) > half_width || (g.dim() == 2 && std::abs(x[1]) > half_width);
    if (out) outside[i] = all[i];
  }
  const double total = detail::pairwise_sum(all);
  return total > 0.0 ? detail::pairwise_sum(outside) / total : 0.0;
}

}  // namespace wam
