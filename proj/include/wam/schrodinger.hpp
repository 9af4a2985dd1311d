#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "wam/grid.hpp"

namespace wam {

struct Trajectory {
  std::vector<double> times;
  std::vector<GridFunction> states;
};

/// Real potential V(t, x) with the exponents (alpha, p) of the claimed class
/// L^alpha(I_T; L^p_x).
struct PotentialSpec {
  std::function<double(double, std::span<const double>)> evaluator;
  double alpha = 2.0;
  double p = std::numeric_limits<double>::infinity();
};

/// Throws InvalidArgument unless 1/alpha + d/p <= 1 and d < p <= inf.
void check_potential_class(const PotentialSpec& v, int dim);

/// Free evolution u(t) = e^{it Delta} u0 via the multiplier e^{-4 pi^2 i t |xi|^2}.
GridFunction propagate(const GridFunction& u0, double t);

/// propagate(u0, t) for every t; independent parallel map sharing one transform of u0.
Trajectory propagate_many(const GridFunction& u0, std::span<const double> times);

/// K_t(x) = (4 pi i t)^{-d/2} e^{i |x|^2 / (4t)}; NumericalError when it aliases.
GridFunction kernel(double t, const Grid& grid);

/// (c/(c + 4 pi i t))^{d/2} e^{-pi |x|^2 / (c + 4 pi i t)}, Re c > 0.
GridFunction evolved_gaussian_closed_form(cplx c, double t, const Grid& grid);

/// Strang splitting for i u_t + Delta u = V u on [0, T] with step dt: half potential
/// phase, free step, half potential phase. States are kept every record_stride
/// steps, always including t = 0 and t = T.
Trajectory split_step_solve(const GridFunction& u0, const PotentialSpec& v, double T, double dt,
                            std::size_t record_stride = 1);

}  // namespace wam
