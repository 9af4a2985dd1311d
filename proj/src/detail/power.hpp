#pragma once

#include <cmath>

namespace wam::detail {

/// x^e for x >= 0, with the exponents that dominate the experiments done by
/// multiplication and square roots instead of pow.
inline double power(double x, double e) {
  if (e == 1.0) return x;
  if (e == 2.0) return x * x;
  if (e == 4.0) return (x * x) * (x * x);
  if (e == 0.5) return std::sqrt(x);
  if (e == 1.5) return x * std::sqrt(x);
  return std::pow(x, e);
}

}  // namespace wam::detail
