#include "wam/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "detail/power.hpp"
#include "detail/sum.hpp"
#include "wam/error.hpp"

namespace wam {
namespace {

void check_lorentz_exponents(double p, double q) {
  if (!(p > 1.0) || std::isinf(p)) throw InvalidArgument("Lorentz exponent p must lie in (1, inf)");
  if (!(q >= 1.0)) throw InvalidArgument("Lorentz exponent q must be >= 1");
}

}  // namespace

double distribution_function(const GridFunction& f, double s) {
  if (!(s >= 0.0)) throw InvalidArgument("distribution_function needs s >= 0");
  std::size_t count = 0;
  for (const cplx& v : f.values()) {
    if (std::abs(v) > s) ++count;
  }
  return static_cast<double>(count) * f.grid().cell_volume();
}

StepRearrangement rearrange(std::vector<double> magnitudes, double cell) {
  std::sort(magnitudes.begin(), magnitudes.end(), std::greater<>());
  StepRearrangement r;
  r.breakpoints.push_back(0.0);
  std::size_t i = 0;
  std::size_t cumulative = 0;
  while (i < magnitudes.size() && magnitudes[i] > 0.0) {
    std::size_t j = i;
    while (j < magnitudes.size() && magnitudes[j] == magnitudes[i]) ++j;
    cumulative += j - i;
    r.levels.push_back(magnitudes[i]);
    r.measures.push_back(static_cast<double>(j - i) * cell);
    r.breakpoints.push_back(static_cast<double>(cumulative) * cell);
    i = j;
  }
  return r;
}

StepRearrangement decreasing_rearrangement(const GridFunction& f) {
  std::vector<double> mags(f.size());
  for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(f[i]);
  return rearrange(std::move(mags), f.grid().cell_volume());
}

double step_lp_norm(const StepRearrangement& r, double p) {
  if (!(p >= 1.0)) throw InvalidArgument("step_lp_norm needs p >= 1");
  if (r.levels.empty()) return 0.0;
  if (std::isinf(p)) return r.levels.front();
  std::vector<double> terms(r.levels.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    terms[k] = detail::power(r.levels[k], p) * r.measures[k];
  }
  return std::pow(detail::pairwise_sum(terms), 1.0 / p);
}

double lorentz_quasinorm(const StepRearrangement& r, double p, double q) {
  check_lorentz_exponents(p, q);
  if (r.levels.empty()) return 0.0;
  if (std::isinf(q)) {
    double best = 0.0;
    for (std::size_t k = 0; k < r.levels.size(); ++k)
      best = std::max(best, r.levels[k] * std::pow(r.breakpoints[k + 1], 1.0 / p));
    return best;
  }
  // (q/p) int t^{q/p - 1} f*(t)^q dt over a step = v^q (t_k^{q/p} - t_{k-1}^{q/p}).
  // The difference of powers loses at most ~k ulps relative to the k-th term.
  const double e = q / p;
  std::vector<double> terms(r.levels.size());
  double previous = 0.0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const double current = detail::power(r.breakpoints[k + 1], e);
    const double increment = e == 1.0 ? r.measures[k] : current - previous;
    previous = current;
    terms[k] = detail::power(r.levels[k], q) * increment;
  }
  return std::pow(detail::pairwise_sum(terms), 1.0 / q);
}

double lorentz_quasinorm(const GridFunction& f, double p, double q) {
  return lorentz_quasinorm(decreasing_rearrangement(f), p, q);
}

double weak_norm_from_distribution(const GridFunction& f, double p) {
  check_lorentz_exponents(p, std::numeric_limits<double>::infinity());
  std::vector<double> mags(f.size());
  for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(f[i]);
  std::sort(mags.begin(), mags.end());
  const double cell = f.grid().cell_volume();
  // s lambda(s)^{1/p} increases on each interval between consecutive distinct
  // magnitudes, so the sup is the left limit at each magnitude v:
  // lambda(v^-) = #{|f| >= v} * cell.
  double best = 0.0;
  for (std::size_t i = 0; i < mags.size(); ++i) {
    if (mags[i] == 0.0 || (i > 0 && mags[i] == mags[i - 1])) continue;
    const auto first = std::lower_bound(mags.begin(), mags.end(), mags[i]);
    const double lambda = static_cast<double>(mags.end() - first) * cell;
    best = std::max(best, mags[i] * std::pow(lambda, 1.0 / p));
  }
  return best;
}

}  // namespace wam
