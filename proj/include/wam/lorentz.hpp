#pragma once

#include <span>
#include <vector>

#include "wam/grid.hpp"

namespace wam {

/// Decreasing rearrangement f* of a sampled function, as a step function in the
/// measure variable: f*(t) = levels[k] on [breakpoints[k], breakpoints[k+1]).
/// Equal magnitudes share one step; zero samples are dropped.
struct StepRearrangement {
  std::vector<double> breakpoints;  // 0 = t_0 < t_1 < ... < t_M
  std::vector<double> levels;       // v_1 > v_2 > ... > v_M > 0
  std::vector<double> measures;     // t_k - t_{k-1}, kept to avoid cancellation

  double total_measure() const { return breakpoints.empty() ? 0.0 : breakpoints.back(); }
};

/// Measure of {|f| > s}.
double distribution_function(const GridFunction& f, double s);

StepRearrangement decreasing_rearrangement(const GridFunction& f);

/// Rearrangement of nonnegative magnitudes, each carrying measure `cell`.
StepRearrangement rearrange(std::vector<double> magnitudes, double cell);

/// L^p norm of the step function f*.
double step_lp_norm(const StepRearrangement& r, double p);

/// Lorentz quasinorm ||f||*_{pq}, 1 < p < inf, 1 <= q <= inf, integrated exactly
/// over each step.
double lorentz_quasinorm(const StepRearrangement& r, double p, double q);
double lorentz_quasinorm(const GridFunction& f, double p, double q);

/// sup_{s>0} s lambda(s)^{1/p}, evaluated from the distribution function alone.
/// Agrees with lorentz_quasinorm(f, p, inf) by the layer-cake identity.
double weak_norm_from_distribution(const GridFunction& f, double p);

}  // namespace wam
