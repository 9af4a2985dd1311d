#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace wam::detail {

/// Short label for a parameter value inside a check id.
inline std::string tag(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

/// ((1 + a^2) / a^4)^{d/4}: the W(FL^1, L^inf) norm of the chirp with parameter a.
inline double chirp_norm_closed_form(double a, int dim) {
  return std::pow((1.0 + a * a) / (a * a * a * a), dim / 4.0);
}

}  // namespace wam::detail
