#include <cmath>
#include <random>

#include "doctest.h"
#include "wam/error.hpp"
#include "wam/lorentz.hpp"

using namespace wam;

namespace {

GridFunction random_function(std::mt19937_64& rng, const Grid& g) {
  std::normal_distribution<double> n;
  std::vector<cplx> v(g.size());
  for (auto& x : v) x = cplx(n(rng), n(rng));
  return GridFunction(g, std::move(v));
}

// Brute-force Lorentz norm: integrate (q/p) (t^{1/p} f*(t))^q dt/t on a fine geometric
// mesh of each step, entirely independent of the closed-form step integration.
double lorentz_by_quadrature(const StepRearrangement& r, double p, double q) {
  double acc = 0.0;
  for (std::size_t k = 0; k < r.levels.size(); ++k) {
    const double a = r.breakpoints[k], b = r.breakpoints[k + 1];
    const double lo = a > 0.0 ? a : b * 1e-12;
    const int m = 4000;
    const double ratio = std::pow(b / lo, 1.0 / m);
    double t = lo;
    for (int i = 0; i < m; ++i) {
      const double t2 = t * ratio;
      const double mid = std::sqrt(t * t2);
      acc += std::pow(std::pow(mid, 1.0 / p) * r.levels[k], q) * std::log(ratio);
      t = t2;
    }
  }
  return std::pow(q / p * acc, 1.0 / q);
}

// |x|^{-1/2} sampled at the infimum over each cell, i.e. at |x_j| + h/2.
GridFunction inverse_sqrt_lower(const Grid& g) {
  std::vector<cplx> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = 1.0 / std::sqrt(std::abs(g.coordinate(i)) + 0.5 * g.spacing());
  return GridFunction(g, std::move(v));
}

}  // namespace

TEST_CASE("rearrangement merges equal magnitudes and drops zeros") {
  const StepRearrangement r = rearrange({1.0, 3.0, 0.0, 3.0, 2.0}, 0.5);
  REQUIRE(r.levels.size() == 3);
  CHECK(r.levels[0] == 3.0);
  CHECK(r.measures[0] == 1.0);
  CHECK(r.breakpoints.back() == doctest::Approx(2.0));
  CHECK(r.total_measure() == doctest::Approx(2.0));
}

TEST_CASE("rearrangement preserves lp norms") {
  std::mt19937_64 rng(7);
  const Grid g = make_grid(1, 4.0, 256);
  for (int trial = 0; trial < 5; ++trial) {
    const GridFunction f = random_function(rng, g);
    const StepRearrangement r = decreasing_rearrangement(f);
    for (double p : {1.0, 2.0, 3.5, HUGE_VAL})
      CHECK(step_lp_norm(r, p) == doctest::Approx(lp_norm(f, p)).epsilon(1e-13));
  }
}

TEST_CASE("lorentz p,p equals lp") {
  std::mt19937_64 rng(11);
  const Grid g = make_grid(2, 4.0, 32);
  const GridFunction f = random_function(rng, g);
  for (double p : {1.5, 2.0, 4.0})
    CHECK(lorentz_quasinorm(f, p, p) == doctest::Approx(lp_norm(f, p)).epsilon(1e-12));
}

TEST_CASE("lorentz agrees with brute-force quadrature") {
  const StepRearrangement r = rearrange({4.0, 2.5, 1.0, 0.5, 0.25}, 0.3);
  for (auto [p, q] : {std::pair{2.0, 1.0}, {1.5, 3.0}, {4.0, 2.0}})
    CHECK(lorentz_quasinorm(r, p, q) == doctest::Approx(lorentz_by_quadrature(r, p, q)).epsilon(1e-5));
}

TEST_CASE("weak norm two ways") {
  std::mt19937_64 rng(3);
  const Grid g = make_grid(1, 2.0, 128);
  const GridFunction f = random_function(rng, g);
  for (double p : {1.5, 2.0, 3.0})
    CHECK(lorentz_quasinorm(f, p, HUGE_VAL) ==
          doctest::Approx(weak_norm_from_distribution(f, p)).epsilon(1e-13));
}

TEST_CASE("weak norm of the inverse square root") {
  // |x|^{-1/2} on R: lambda(s) = 2 s^{-2}, so the weak L^2 norm is sqrt 2.
  const Grid g = make_grid(1, 64.0, 1 << 12);
  const GridFunction f = inverse_sqrt_lower(g);
  CHECK(weak_norm_from_distribution(f, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(lorentz_quasinorm(f, 2.0, HUGE_VAL) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // Midpoint samples put (h/2)^{-1/2} on the two central cells, so the top step alone
  // gives sqrt(2h) (h/2)^{-1/2} = 2 whatever the resolution.
  const Grid mid = make_grid(1, 64.0, 1 << 12, Sampling::half_cell);
  std::vector<cplx> v(mid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / std::sqrt(std::abs(mid.coordinate(i)));
  CHECK(weak_norm_from_distribution(GridFunction(mid, std::move(v)), 2.0) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("indicators have norm m^{1/p} for every q") {
  const StepRearrangement r = rearrange({1.0, 1.0, 1.0, 0.0}, 0.5);
  for (double q : {1.0, 2.0, 5.0, HUGE_VAL})
    CHECK(lorentz_quasinorm(r, 3.0, q) == doctest::Approx(std::pow(1.5, 1.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("homogeneity") {
  std::mt19937_64 rng(5);
  const Grid g = make_grid(1, 4.0, 128);
  const GridFunction f = random_function(rng, g);
  const GridFunction cf = scale(f, cplx(0.0, -3.0));
  for (auto [p, q] : {std::pair{2.0, 1.0}, {1.5, 4.0}, {3.0, HUGE_VAL}})
    CHECK(lorentz_quasinorm(cf, p, q) == doctest::Approx(3.0 * lorentz_quasinorm(f, p, q)).epsilon(1e-12));
}

TEST_CASE("embedding in q holds with a small constant") {
  // L^{p,q1} in L^{p,q2} for q1 <= q2; with this normalization the ratio stays below 1 + eps,
  // well inside the allowance of 2.
  std::mt19937_64 rng(13);
  const Grid g = make_grid(1, 4.0, 256);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const GridFunction f = random_function(rng, g);
    for (double p : {1.5, 2.0, 4.0}) {
      const std::vector<double> qs{1.0, 2.0, 4.0, HUGE_VAL};
      for (std::size_t i = 0; i + 1 < qs.size(); ++i)
        worst = std::max(worst, lorentz_quasinorm(f, p, qs[i + 1]) / lorentz_quasinorm(f, p, qs[i]));
    }
  }
  CHECK(worst <= 2.0);
}

TEST_CASE("distribution function") {
  const Grid g = make_grid(1, 8.0, 8);
  std::vector<cplx> v{0.0, 1.0, 2.0, 3.0, 0.0, 0.0, 0.0, 0.0};
  const GridFunction f(g, v);
  CHECK(distribution_function(f, 1.5) == doctest::Approx(2.0));
  CHECK(distribution_function(f, 0.0) == doctest::Approx(3.0));
}

TEST_CASE("lorentz rejects bad exponents") {
  const StepRearrangement r = rearrange({1.0}, 1.0);
  CHECK_THROWS_AS(lorentz_quasinorm(r, 1.0, 2.0), InvalidArgument);
  CHECK_THROWS_AS(lorentz_quasinorm(r, 2.0, 0.5), InvalidArgument);
}
