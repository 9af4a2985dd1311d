#include <cmath>

#include "wam/error.hpp"
#include "wam/experiments.hpp"

namespace wam {

DecayFit fit_decay(std::span<const double> ts, std::span<const double> norms) {
  if (ts.size() != norms.size()) throw InvalidArgument("fit_decay: size mismatch");
  if (ts.size() < 4) throw InvalidArgument("fit_decay needs at least 4 points");
  DecayFit fit;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts[i] > 0.0) || !(norms[i] > 0.0))
      throw InvalidArgument("fit_decay needs positive times and norms");
    fit.log_t.push_back(std::log(ts[i]));
    fit.log_norm.push_back(std::log(norms[i]));
  }
  const auto n = static_cast<double>(ts.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    mx += fit.log_t[i];
    my += fit.log_norm[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    sxx += (fit.log_t[i] - mx) * (fit.log_t[i] - mx);
    sxy += (fit.log_t[i] - mx) * (fit.log_norm[i] - my);
  }
  if (!(sxx > 0.0)) throw InvalidArgument("fit_decay needs distinct times");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double dev = fit.log_norm[i] - (fit.intercept + fit.slope * fit.log_t[i]);
    fit.residual = std::max(fit.residual, std::abs(dev));
  }
  return fit;
}

std::vector<double> geometric_points(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw InvalidArgument("need 0 < lo < hi and n >= 2");
  std::vector<double> out(n);
  const double ratio = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo * std::exp(ratio * static_cast<double>(i));
  out.back() = hi;
  return out;
}

bool AdmissiblePair::endpoint() const {
  return dim > 1 && q == 4.0 && std::abs(r - 2.0 * dim / (dim - 1.0)) < 1e-12;
}

AdmissiblePair make_admissible_pair(double q, double r, int dim, bool exploratory) {
  if (dim != 1 && dim != 2) throw InvalidArgument("pair dimension must be 1 or 2");
  if (!(r >= 2.0)) throw InvalidArgument("admissible pair needs r >= 2");
  if (!(q >= (exploratory ? 2.0 : 4.0)))
    throw InvalidArgument(exploratory ? "exploratory pair needs q >= 2"
                                      : "admissible pair needs q >= 4");
  const double lhs = (std::isinf(q) ? 0.0 : 2.0 / q) + (std::isinf(r) ? 0.0 : dim / r);
  if (std::abs(lhs - 0.5 * dim) > 1e-12)
    throw InvalidArgument("pair violates 2/q + d/r = d/2");
  return {q, r, dim};
}

double boundary_mass(const GridFunction& f) {
  return mass_outside_box(f, 7.0 * f.grid().extent() / 16.0);
}

}  // namespace wam
