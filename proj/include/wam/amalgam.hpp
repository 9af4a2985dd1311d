#pragma once

#include <array>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "wam/grid.hpp"

namespace wam {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class WindowKind {
  gaussian_unit,  // g(x) = exp(-pi |x|^2)
  bump,           // g(x) = prod_i exp(1 - 1/(1 - (x_i/b)^2)) on |x_i| < b
};

enum class WindowNormalization {
  unit_peak,  // g(0) = 1; the window for which the chirp-norm formula is exact
  unit_l2,    // ||g||_{L^2} = 1
};

struct WindowSpec {
  WindowKind kind = WindowKind::gaussian_unit;
  double support_halfwidth = 1.0;  // bump only
  WindowNormalization normalization = WindowNormalization::unit_peak;
  /// Largest fraction of the window's L^1 mass that may be cut off by the frame.
  double truncation_tol = 1e-10;
};

/// Window value at displacement x (x.size() is the dimension).
double window_value(const WindowSpec& w, std::span<const double> x);
/// ||g||_{L^2(R^d)} including normalization.
double window_l2_norm(const WindowSpec& w, int dim);
/// Fraction of the L^1 mass of g outside the cube [-r, r]^d.
double window_mass_outside(const WindowSpec& w, int dim, double r);
/// Smallest r with window_mass_outside(w, dim, r) <= truncation_tol.
double window_radius(const WindowSpec& w, int dim);
/// One-axis width int g / g(0): 1 for the Gaussian.
double window_effective_width(const WindowSpec& w);

enum class LocalTransform { none, fourier };

/// Local component B: L^p, FL^p, L^{p,q} or FL^{p,q}.
struct LocalNormSpec {
  LocalTransform transform = LocalTransform::none;
  double p = 1.0;
  std::optional<double> lorentz_q = std::nullopt;
};

/// Global component C: L^p, or weak L^{p,inf} when weak is set.
struct GlobalNormSpec {
  double p = kInf;
  bool weak = false;
};

enum class LatticeRegion {
  full,          // every lattice point of the torus
  central_half,  // centers with all |x_i| < L/4
};

/// Symmetry of the data that profile evaluation may exploit.
enum class LatticeSymmetry {
  none,
  /// f(x) = f(-x) along every axis and, in d=2, f(x1, x2) = f(x2, x1); the
  /// profile is constant on orbits, so one center per orbit is evaluated.
  reflections,
};

struct AmalgamSpec {
  WindowSpec window;
  double lattice_step = 0.25;
  LocalNormSpec local;
  GlobalNormSpec global;
  LatticeRegion region = LatticeRegion::full;
};

/// min(effective width / 4, 8 h), rounded down to h times a power of two.
double default_lattice_step(const Grid& grid, const WindowSpec& window);

AmalgamSpec make_amalgam_spec(const Grid& grid, LocalNormSpec local, GlobalNormSpec global,
                              WindowSpec window = {},
                              LatticeRegion region = LatticeRegion::full);

/// Throws InvalidArgument when spec is not usable on grid.
void validate(const AmalgamSpec& spec, const Grid& grid);

/// Norm of nonnegative samples, each carrying measure `cell`, in the local space
/// (the transform field is ignored here).
double local_component_norm(std::span<const double> magnitudes, double cell,
                            const LocalNormSpec& local);

/// Norm of a lattice profile in the global space; `cell` is the lattice cell measure.
double global_component_norm(std::span<const double> values, double cell,
                             const GlobalNormSpec& global);

/// Sliding-window local norms f_B(x) = ||f T_x g||_B on the window lattice.
///
/// The window is cut to a frame of M points per axis covering its effective
/// support, and FL^p components are computed from the M-point DFT of the
/// windowed frame. Evaluations at different centers are independent.
class LocalNormEvaluator {
 public:
  LocalNormEvaluator(const Grid& grid, const AmalgamSpec& spec);

  const Grid& grid() const { return grid_; }
  const AmalgamSpec& spec() const { return spec_; }
  std::size_t frame_points() const { return frame_n_; }
  std::size_t lattice_stride() const { return stride_; }

  /// Grid index (per axis) of every lattice center in the spec's region.
  const std::vector<std::array<std::size_t, 2>>& centers() const { return centers_; }

  /// ||f T_c g||_B for the center with the given per-axis grid indices.
  double evaluate(const GridFunction& f, std::array<std::size_t, 2> center) const;

  /// All centers, in centers() order; parallel over centers. With
  /// LatticeSymmetry::reflections, f must have that symmetry (checked to 1e-12
  /// relative) and the grid must use node sampling.
  std::vector<double> profile(const GridFunction& f,
                              LatticeSymmetry symmetry = LatticeSymmetry::none) const;

  /// Global norm of profile(f).
  double norm(const GridFunction& f, LatticeSymmetry symmetry = LatticeSymmetry::none) const;

 private:
  void check_reflection_symmetry(const GridFunction& f) const;

  Grid grid_;
  AmalgamSpec spec_;
  std::size_t stride_ = 1;
  std::size_t frame_n_ = 0;
  std::vector<double> window_frame_;
  std::vector<std::array<std::size_t, 2>> centers_;
};

/// ||f T_center g||_B; center must be a lattice point.
double local_norm(const GridFunction& f, std::array<double, 2> center, const AmalgamSpec& spec);

/// ||f||_{W(B,C)} = ||f_B||_C over the lattice, cell weight lattice_step^d.
double amalgam_norm(const GridFunction& f, const AmalgamSpec& spec);

/// Local W(L^{q1}) norms in time of a scalar trajectory sampled at t_k = t_0 + k dt,
/// at window centers u_j = t_0 + j * time_step covering the trajectory plus the
/// window radius on both sides. time_step must be a positive multiple of dt.
std::vector<double> time_local_profile(std::span<const double> values, double dt, double q1,
                                       const WindowSpec& window, double time_step);

/// ||t -> values(t)||_{W(L^{q1}, L^{q2})_t}.
double mixed_time_norm(std::span<const double> values, double dt, double q1, double q2,
                       const WindowSpec& window, double time_step);

/// Space-time norm read as || ||F(t)||_{W_x} ||_{W(L^{q1},L^{q2})_t}.
double space_time_norm(std::span<const GridFunction> states, double dt,
                       const AmalgamSpec& space, double q1, double q2,
                       const WindowSpec& time_window, double time_step);

/// The same norm read as || F ||_{W(L^{q1}_t W_x, L^{q2}_t)}: the time window
/// multiplies F before the space norm is taken.
double space_time_norm_iterated(std::span<const GridFunction> states, double dt,
                                const AmalgamSpec& space, double q1, double q2,
                                const WindowSpec& time_window, double time_step);

}  // namespace wam
