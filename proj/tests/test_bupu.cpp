#include <cmath>

#include "doctest.h"
#include "wam/bupu.hpp"
#include "wam/error.hpp"

using namespace wam;

TEST_CASE("partition of unity in one dimension") {
  const Grid g = make_grid(1, 16.0, 512);
  const Bupu b = build_bupu(g, 1.0);
  CHECK(b.phis.size() == 16);
  double worst = 0.0, lo = 1.0, hi = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    double s = 0.0;
    for (const auto& phi : b.phis) {
      s += phi[i].real();
      lo = std::min(lo, phi[i].real());
      hi = std::max(hi, phi[i].real());
    }
    worst = std::max(worst, std::abs(s - 1.0));
  }
  CHECK(worst < 1e-12);
  CHECK(lo >= 0.0);
  CHECK(hi <= 1.0 + 1e-15);
  CHECK(max_overlap(b) <= 5);
}

TEST_CASE("psi equals one on the support of phi") {
  const Grid g = make_grid(2, 8.0, 64);
  const Bupu b = build_bupu(g, 1.0);
  for (std::size_t a = 0; a < b.phis.size(); a += 5)
    for (std::size_t i = 0; i < g.size(); ++i)
      if (b.phis[a][i] != cplx(0.0)) CHECK(b.psis[a][i] == cplx(1.0));
}

TEST_CASE("synthesis inverts analysis") {
  const Grid g = make_grid(2, 8.0, 64);
  const Bupu b = build_bupu(g, 1.0);
  const GridFunction f = sample(Gaussian{cplx(1.0, 0.5)}, g);
  const GridFunction back = synthesis_R(analysis_S(f, b), b);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(back[i] - f[i]) < 1e-12);
}

TEST_CASE("bupu lattice norm of a constant") {
  // ||phi_a||_{L^2} summed over the partition: sum_a s ||phi_a||_2^2 with s = 1.
  const Grid g = make_grid(1, 16.0, 512);
  const Bupu b = build_bupu(g, 1.0);
  const GridFunction one(g, std::vector<cplx>(g.size(), 1.0));
  double expect = 0.0;
  for (const auto& phi : b.phis) expect += std::pow(lp_norm(phi, 2.0), 2.0);
  CHECK(bupu_amalgam_norm(one, {LocalTransform::none, 2.0}, 2.0, b) ==
        doctest::Approx(std::sqrt(expect)).epsilon(1e-12));
}

TEST_CASE("bupu rejects bad spacings") {
  const Grid g = make_grid(1, 16.0, 512);
  CHECK_THROWS_AS(build_bupu(g, 0.3), InvalidArgument);
  CHECK_THROWS_AS(build_bupu(g, 3.0), InvalidArgument);     // does not divide the extent
  CHECK_THROWS_AS(build_bupu(g, 0.0625), InvalidArgument);  // too few cells
  CHECK_THROWS_AS(build_bupu(g, 8.0), InvalidArgument);     // fewer than four translates
}
