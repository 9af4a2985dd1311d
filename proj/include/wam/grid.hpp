#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace wam {

using cplx = std::complex<double>;

/// Where the nodes sit inside each cell: at the left edge, or at the midpoint
/// (x_j = (j + 1/2) h - L/2), which keeps samples off the origin.
enum class Sampling { nodes, half_cell };

/// Uniform periodic grid on the torus [-L/2, L/2)^dim with N points per axis.
///
/// Every grid knows the sampling of its Fourier-dual grid so that a forward
/// and inverse transform round-trip back to the same node positions.
class Grid {
 public:
  Grid(int dim, double extent, std::size_t points_per_dim,
       Sampling sampling = Sampling::nodes);

  int dim() const { return dim_; }
  double extent() const { return extent_; }
  std::size_t points_per_dim() const { return n_; }
  std::size_t size() const { return dim_ == 1 ? n_ : n_ * n_; }
  double spacing() const { return extent_ / static_cast<double>(n_); }
  double freq_spacing() const { return 1.0 / extent_; }
  double cell_volume() const;
  Sampling sampling() const { return shift_ == 0.0 ? Sampling::nodes : Sampling::half_cell; }

  /// Coordinate of node i along one axis.
  double coordinate(std::size_t i) const {
    return -0.5 * extent_ + (static_cast<double>(i) + shift_) * spacing();
  }
  /// Coordinates of the node with the given flat (row-major) index.
  std::array<double, 2> point(std::size_t flat) const;
  std::array<std::size_t, 2> multi_index(std::size_t flat) const;
  std::size_t flat_index(std::array<std::size_t, 2> idx) const {
    return dim_ == 1 ? idx[0] : idx[0] * n_ + idx[1];
  }

  /// Frequency grid {(k - N/2)/L}: itself a grid of extent N/L.
  Grid dual() const;

  /// Cell offsets (0 or 1/2) of this grid and of its dual; used by the FFT.
  double shift() const { return shift_; }
  double dual_shift() const { return dual_shift_; }

  bool operator==(const Grid&) const = default;

 private:
  Grid(int dim, double extent, std::size_t n, double shift, double dual_shift);

  int dim_;
  double extent_;
  std::size_t n_;
  double shift_;
  double dual_shift_;
};

Grid make_grid(int dim, double extent, std::size_t points_per_dim,
               Sampling sampling = Sampling::nodes);

/// Complex samples on a grid, row-major. Immutable once built; every entry is finite.
class GridFunction {
 public:
  explicit GridFunction(Grid grid);
  GridFunction(Grid grid, std::vector<cplx> values);

  const Grid& grid() const { return grid_; }
  std::span<const cplx> values() const { return values_; }
  const cplx& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  /// Moves the samples out, leaving this function empty.
  std::vector<cplx> release() && { return std::move(values_); }

 private:
  Grid grid_;
  std::vector<cplx> values_;
};

GridFunction scale(const GridFunction& f, cplx c);
GridFunction multiply(const GridFunction& f, const GridFunction& g);
GridFunction add(const GridFunction& f, const GridFunction& g);

// Closed-form reference functions.

/// x -> exp(-pi |x|^2 / c), Re c >= 0, c != 0.
struct Gaussian {
  cplx c{1.0, 0.0};
};
/// x -> (a i)^{-d/2} exp(-pi |x|^2 / (a i)), principal root.
struct Chirp {
  double a = 1.0;
};
/// t -> |t + shift|^{-alpha} + |t + shift|^{-2 alpha}, 0 < alpha < 1/2 (1-d only).
struct TailPhi {
  double alpha = 0.25;
  double shift = 0.0;
};
/// Indicator of an axis-aligned box.
struct Indicator {
  std::array<double, 2> center{0.0, 0.0};
  std::array<double, 2> half_width{1.0, 1.0};
};
/// Free Schrodinger evolution of Gaussian{c} at time t:
/// (c/(c+4 pi i t))^{d/2} exp(-pi |x|^2 / (c + 4 pi i t)).
struct EvolvedGaussian {
  cplx c{1.0, 0.0};
  double t = 0.0;
};

using AnalyticFunction = std::variant<Gaussian, Chirp, TailPhi, Indicator, EvolvedGaussian>;

cplx evaluate(const AnalyticFunction& f, std::span<const double> x);
GridFunction sample(const AnalyticFunction& f, const Grid& grid);

/// Throws NumericalError unless N >= 2 L^2 / |a|, the Nyquist condition for
/// the phase exp(i pi |x|^2 / a) at the torus edge with a factor-two margin.
void check_chirp_sampling(const Grid& grid, double a);

/// Continuous-normalization transform: samples of int f(x) e^{-2 pi i x w} dx
/// on grid.dual().
GridFunction fourier_transform(const GridFunction& f);
GridFunction inverse_fourier_transform(const GridFunction& fhat);

/// Riemann-sum L^p norm; p = infinity gives the sample maximum.
double lp_norm(const GridFunction& f, double p);

/// sum f conj(g) h^d.
cplx inner_product(const GridFunction& f, const GridFunction& g);

/// Periodic shift by whole cells: (T_k f)(x_j) = f(x_{j-k}).
GridFunction translate(const GridFunction& f, std::array<long, 2> shift);

/// Multiplication by exp(2 pi i x . k / L) for an integer frequency vector k.
GridFunction modulate(const GridFunction& f, std::array<long, 2> freq);

/// Fraction of sum |f|^2 carried by nodes with some |x_i| > half_width.
double mass_outside_box(const GridFunction& f, double half_width);

}  // namespace wam
