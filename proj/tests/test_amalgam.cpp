#include <cmath>
#include <random>

#include "doctest.h"
#include "wam/amalgam.hpp"
#include "wam/error.hpp"
#include "wam/lorentz.hpp"

using namespace wam;

namespace {

const double kPi = std::acos(-1.0);

GridFunction constant(const Grid& g, cplx c) {
  return GridFunction(g, std::vector<cplx>(g.size(), c));
}

}  // namespace

TEST_CASE("window normalizations") {
  WindowSpec w;
  CHECK(window_l2_norm(w, 1) == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-12));
  CHECK(window_l2_norm(w, 2) == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-12));
  w.normalization = WindowNormalization::unit_l2;
  CHECK(window_l2_norm(w, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(window_l2_norm(w, 2) == doctest::Approx(1.0).epsilon(1e-12));

  WindowSpec b;
  b.kind = WindowKind::bump;
  b.support_halfwidth = 2.0;
  b.normalization = WindowNormalization::unit_l2;
  CHECK(window_l2_norm(b, 1) == doctest::Approx(1.0).epsilon(1e-8));
  const double zero[1] = {2.5};
  CHECK(window_value(b, zero) == 0.0);
  CHECK(window_radius(b, 1) == doctest::Approx(2.0));
}

TEST_CASE("gaussian window tail mass") {
  // 1 - erf(sqrt(pi) r) in one dimension.
  WindowSpec w;
  CHECK(window_mass_outside(w, 1, 1.0) == doctest::Approx(std::erfc(std::sqrt(kPi))).epsilon(1e-10));
  const double r = window_radius(w, 1);
  CHECK(window_mass_outside(w, 1, r) <= w.truncation_tol * (1 + 1e-9));
  CHECK(window_mass_outside(w, 1, 0.98 * r) > w.truncation_tol);
  CHECK(window_effective_width(w) == doctest::Approx(1.0));
}

TEST_CASE("component norms") {
  const std::vector<double> v{3.0, 4.0};
  CHECK(local_component_norm(v, 1.0, {LocalTransform::none, 2.0}) == doctest::Approx(5.0));
  CHECK(local_component_norm(v, 1.0, {LocalTransform::none, kInf}) == doctest::Approx(4.0));
  CHECK(local_component_norm(v, 0.25, {LocalTransform::none, 1.0}) == doctest::Approx(1.75));
  CHECK(global_component_norm(v, 1.0, {kInf}) == doctest::Approx(4.0));
  // Weak L^2: sup s lambda(s)^{1/2} = max(4 * 1, 3 * sqrt 2).
  CHECK(global_component_norm(v, 1.0, {2.0, true}) == doctest::Approx(3.0 * std::sqrt(2.0)));
  const std::vector<double> same{2.0, 2.0, 2.0};
  CHECK(local_component_norm(same, 0.5, {LocalTransform::none, 2.0, 2.0}) ==
        doctest::Approx(local_component_norm(same, 0.5, {LocalTransform::none, 2.0})));
}

TEST_CASE("local norms of a gaussian against closed forms") {
  const Grid g = make_grid(1, 32.0, 1024);
  const GridFunction f = sample(Gaussian{1.0}, g);
  // f g = e^{-2 pi x^2}: L^2 norm 2^{-1/2}; FL^1 norm = its value at 0 since the
  // transform is a positive gaussian.
  const AmalgamSpec l2 = make_amalgam_spec(g, {LocalTransform::none, 2.0}, {kInf});
  CHECK(local_norm(f, {0.0, 0.0}, l2) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
  const AmalgamSpec fl1 = make_amalgam_spec(g, {LocalTransform::fourier, 1.0}, {kInf});
  CHECK(local_norm(f, {0.0, 0.0}, fl1) == doctest::Approx(1.0).epsilon(1e-8));
  // Off center: f T_x g = e^{-pi x^2 / 2} e^{-2 pi (y - x/2)^2}.
  CHECK(local_norm(f, {1.0, 0.0}, fl1) == doctest::Approx(std::exp(-kPi / 2)).epsilon(1e-8));
  CHECK(amalgam_norm(f, fl1) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("constants have unit W(FL1, Linf) norm in two dimensions") {
  const Grid g = make_grid(2, 16.0, 128);
  const AmalgamSpec spec = make_amalgam_spec(g, {LocalTransform::fourier, 1.0}, {kInf});
  CHECK(amalgam_norm(constant(g, cplx(0.0, 2.0)), spec) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("global L^p sums over the lattice") {
  // With a unit-peak gaussian window the local L^2 profile of 1 is 2^{-1/4} everywhere,
  // so the global L^2 norm is 2^{-1/4} sqrt(L).
  const Grid g = make_grid(1, 16.0, 256);
  const AmalgamSpec spec = make_amalgam_spec(g, {LocalTransform::none, 2.0}, {2.0});
  CHECK(amalgam_norm(constant(g, 1.0), spec) ==
        doctest::Approx(std::pow(2.0, -0.25) * 4.0).epsilon(1e-9));
}

TEST_CASE("symmetric profile matches the full evaluation") {
  for (int dim : {1, 2}) {
    const Grid g = make_grid(dim, 16.0, dim == 1 ? 512 : 64);
    const GridFunction f = sample(EvolvedGaussian{cplx(0.5), 0.3}, g);
    for (LocalNormSpec local : {LocalNormSpec{LocalTransform::fourier, 4.0 / 3.0},
                                LocalNormSpec{LocalTransform::fourier, 4.0 / 3.0, 2.0},
                                LocalNormSpec{LocalTransform::none, 3.0}}) {
      const LocalNormEvaluator ev(g, make_amalgam_spec(g, local, {2.0}));
      const auto full = ev.profile(f);
      const auto sym = ev.profile(f, LatticeSymmetry::reflections);
      REQUIRE(full.size() == sym.size());
      double worst = 0.0;
      for (std::size_t i = 0; i < full.size(); ++i)
        worst = std::max(worst, std::abs(full[i] - sym[i]) / std::max(full[i], 1e-300));
      // Mirrored frames are transformed in a different order, so only rounding differs.
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("symmetric profile rejects asymmetric data") {
  const Grid g = make_grid(1, 16.0, 256);
  const GridFunction f = translate(sample(Gaussian{1.0}, g), {3, 0});
  const LocalNormEvaluator ev(g, make_amalgam_spec(g, {LocalTransform::none, 2.0}, {kInf}));
  CHECK_THROWS_AS(ev.profile(f, LatticeSymmetry::reflections), InvalidArgument);
}

TEST_CASE("lattice geometry") {
  const Grid g = make_grid(1, 32.0, 1024);
  CHECK(default_lattice_step(g, {}) == doctest::Approx(0.25));
  AmalgamSpec spec = make_amalgam_spec(g, {LocalTransform::none, 2.0}, {kInf});
  spec.region = LatticeRegion::central_half;
  const LocalNormEvaluator ev(g, spec);
  for (const auto& c : ev.centers()) CHECK(std::abs(g.coordinate(c[0])) < 8.0);
  CHECK(ev.centers().size() == 63);
}

TEST_CASE("invalid specs are rejected") {
  const Grid g = make_grid(1, 32.0, 1024);
  AmalgamSpec spec = make_amalgam_spec(g, {LocalTransform::none, 2.0}, {kInf});
  spec.lattice_step = 0.3;
  CHECK_THROWS_AS(validate(spec, g), InvalidArgument);
  spec.lattice_step = 0.5;
  CHECK_THROWS_AS(validate(spec, g), InvalidArgument);  // coarser than width / 4
  const Grid tiny = make_grid(1, 2.0, 64);
  CHECK_THROWS_AS(make_amalgam_spec(tiny, {LocalTransform::none, 2.0}, {kInf}), InvalidArgument);
  CHECK_THROWS_AS(make_amalgam_spec(g, {LocalTransform::none, 0.5}, {kInf}), InvalidArgument);
}

TEST_CASE("time profile of a constant trajectory") {
  WindowSpec w;
  w.normalization = WindowNormalization::unit_l2;
  const std::vector<double> ones(4097, 1.0);
  const auto prof = time_local_profile(ones, 1.0 / 64.0, 2.0, w, 0.25);
  // Deep inside, the local L^2 norm of 1 against a unit-L^2 window is 1.
  CHECK(prof[prof.size() / 2] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(prof.front() < 1e-3);
}

TEST_CASE("space-time readings agree for separable windows") {
  const Grid g = make_grid(1, 16.0, 256);
  const AmalgamSpec space = make_amalgam_spec(g, {LocalTransform::fourier, 4.0 / 3.0}, {4.0});
  std::vector<GridFunction> states;
  const double dt = 0.0625;
  for (int k = 0; k < 33; ++k) states.push_back(sample(EvolvedGaussian{cplx(1.0), k * dt - 1.0}, g));
  WindowSpec w;
  w.normalization = WindowNormalization::unit_l2;
  const double a = space_time_norm(states, dt, space, 2.0, 8.0, w, 0.25);
  const double b = space_time_norm_iterated(states, dt, space, 2.0, 8.0, w, 0.25);
  CHECK(std::isfinite(a));
  CHECK(a == doctest::Approx(b).epsilon(1e-10));
}
