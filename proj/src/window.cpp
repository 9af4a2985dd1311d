#include <cmath>
#include <numbers>

#include "wam/amalgam.hpp"
#include "wam/error.hpp"

namespace wam {
namespace {

constexpr double kPi = std::numbers::pi;

double bump_profile(double x, double b) {
  const double u = x / b;
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

// Composite Simpson rule for the bump profile raised to `power` on [-r, r].
double bump_integral(double b, double r, double power) {
  constexpr int kIntervals = 40000;
  const double a = -std::min(r, b);
  const double h = -2.0 * a / kIntervals;
  double s = 0.0;
  for (int i = 0; i <= kIntervals; ++i) {
    const double w = (i == 0 || i == kIntervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += w * std::pow(bump_profile(a + i * h, b), power);
  }
  return s * h / 3.0;
}

double profile_1d(const WindowSpec& w, double x) {
  return w.kind == WindowKind::gaussian_unit ? std::exp(-kPi * x * x)
                                             : bump_profile(x, w.support_halfwidth);
}

double profile_l2_1d(const WindowSpec& w) {
  return w.kind == WindowKind::gaussian_unit
             ? std::pow(2.0, -0.25)
             : std::sqrt(bump_integral(w.support_halfwidth, w.support_halfwidth, 2.0));
}

void check_window(const WindowSpec& w) {
  if (w.kind == WindowKind::bump && !(w.support_halfwidth > 0.0))
    throw InvalidArgument("bump window needs a positive support half-width");
  if (!(w.truncation_tol > 0.0) && w.kind == WindowKind::gaussian_unit)
    throw InvalidArgument("gaussian window needs a positive truncation tolerance");
}

}  // namespace

double window_value(const WindowSpec& w, std::span<const double> x) {
  double v = 1.0;
  for (double xi : x) v *= profile_1d(w, xi);
  if (w.normalization == WindowNormalization::unit_l2)
    v /= std::pow(profile_l2_1d(w), static_cast<double>(x.size()));
  return v;
}

double window_l2_norm(const WindowSpec& w, int dim) {
  check_window(w);
  if (w.normalization == WindowNormalization::unit_l2) return 1.0;
  return std::pow(profile_l2_1d(w), dim);
}

double window_mass_outside(const WindowSpec& w, int dim, double r) {
  check_window(w);
  double inside_1d;
  if (w.kind == WindowKind::gaussian_unit) {
    inside_1d = std::erf(std::sqrt(kPi) * r);
  } else {
    const double b = w.support_halfwidth;
    if (r >= b) return 0.0;
    inside_1d = bump_integral(b, r, 1.0) / bump_integral(b, b, 1.0);
  }
  return -std::expm1(dim * std::log(inside_1d));
}

double window_radius(const WindowSpec& w, int dim) {
  check_window(w);
  if (w.kind == WindowKind::bump) return w.support_halfwidth;
  double lo = 0.0, hi = 1.0;
  while (window_mass_outside(w, dim, hi) > w.truncation_tol) hi *= 2.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (window_mass_outside(w, dim, mid) > w.truncation_tol ? lo : hi) = mid;
  }
  return hi;
}

double window_effective_width(const WindowSpec& w) {
  check_window(w);
  return w.kind == WindowKind::gaussian_unit
             ? 1.0
             : bump_integral(w.support_halfwidth, w.support_halfwidth, 1.0);
}

}  // namespace wam
