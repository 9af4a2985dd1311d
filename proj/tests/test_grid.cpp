#include <cmath>
#include <numbers>

#include "doctest.h"
#include "wam/error.hpp"
#include "wam/grid.hpp"

using namespace wam;
using std::numbers::pi;

namespace {

// Direct O(N^2) Riemann sum of int f(x) e^{-2 pi i x w} dx: the oracle for the FFT path.
cplx direct_transform(const GridFunction& f, double w) {
  const Grid& g = f.grid();
  cplx acc = 0.0;
  for (std::size_t j = 0; j < g.points_per_dim(); ++j)
    acc += f[j] * std::exp(cplx(0.0, -2.0 * pi * g.coordinate(j) * w));
  return acc * g.spacing();
}

}  // namespace

TEST_CASE("grid coordinates are centered") {
  const Grid g = make_grid(1, 8.0, 16);
  CHECK(g.coordinate(0) == doctest::Approx(-4.0));
  CHECK(g.coordinate(8) == doctest::Approx(0.0));
  const Grid h = make_grid(1, 8.0, 16, Sampling::half_cell);
  CHECK(h.coordinate(0) == doctest::Approx(-3.75));
  CHECK(g.dual().extent() == doctest::Approx(2.0));
  CHECK(g.dual().spacing() == doctest::Approx(1.0 / 8.0));
}

TEST_CASE("grid rejects bad shapes") {
  CHECK_THROWS_AS(make_grid(3, 1.0, 16), InvalidArgument);
  CHECK_THROWS_AS(make_grid(1, -1.0, 16), InvalidArgument);
  CHECK_THROWS_AS(make_grid(1, 1.0, 0), InvalidArgument);
  CHECK_THROWS_AS(make_grid(1, 1.0, 24), InvalidArgument);
  CHECK_THROWS_AS(make_grid(2, 1.0, 8192), InvalidArgument);
}

TEST_CASE("multi index round trip in 2d") {
  const Grid g = make_grid(2, 4.0, 8);
  for (std::size_t i = 0; i < g.size(); i += 7) CHECK(g.flat_index(g.multi_index(i)) == i);
}

TEST_CASE("fft agrees with a direct sum") {
  const Grid g = make_grid(1, 8.0, 64);
  const GridFunction f = sample(Gaussian{cplx(0.7, 0.3)}, g);
  const GridFunction fh = fourier_transform(f);
  const Grid d = g.dual();
  for (std::size_t k : {0UL, 5UL, 31UL, 32UL, 50UL})
    CHECK(std::abs(fh[k] - direct_transform(f, d.coordinate(k))) < 1e-12);
}

TEST_CASE("fft agrees with a direct sum on half-cell grids") {
  const Grid g = make_grid(1, 8.0, 64, Sampling::half_cell);
  const GridFunction f = sample(Gaussian{1.0}, g);
  const GridFunction fh = fourier_transform(f);
  const Grid d = g.dual();
  for (std::size_t k : {0UL, 17UL, 32UL, 63UL})
    CHECK(std::abs(fh[k] - direct_transform(f, d.coordinate(k))) < 1e-12);
  const GridFunction back = inverse_fourier_transform(fh);
  for (std::size_t j = 0; j < f.size(); ++j) CHECK(std::abs(back[j] - f[j]) < 1e-13);
}

TEST_CASE("gaussian transform matches the closed form") {
  for (int dim : {1, 2}) {
    const Grid g = make_grid(dim, 16.0, dim == 1 ? 256 : 128);
    for (cplx c : {cplx(0.5), cplx(1.0), cplx(2.0), cplx(1.0, 1.0)}) {
      const GridFunction fh = fourier_transform(sample(Gaussian{c}, g));
      const Grid d = g.dual();
      double worst = 0.0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        const auto w = d.point(i);
        const double w2 = w[0] * w[0] + (dim == 2 ? w[1] * w[1] : 0.0);
        const cplx expect = std::pow(c, 0.5 * dim) * std::exp(-pi * c * w2);
        worst = std::max(worst, std::abs(fh[i] - expect));
      }
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("parseval and inner products") {
  const Grid g = make_grid(1, 16.0, 512);
  const GridFunction f = sample(Gaussian{cplx(1.0, 0.5)}, g);
  const GridFunction fh = fourier_transform(f);
  CHECK(lp_norm(fh, 2.0) == doctest::Approx(lp_norm(f, 2.0)).epsilon(1e-12));
  CHECK(std::abs(inner_product(f, f)) == doctest::Approx(std::pow(lp_norm(f, 2.0), 2)).epsilon(1e-12));
}

TEST_CASE("lp norms of a gaussian") {
  // ||e^{-pi x^2}||_p = p^{-1/(2p)} on R.
  const Grid g = make_grid(1, 16.0, 1024);
  const GridFunction f = sample(Gaussian{1.0}, g);
  for (double p : {1.0, 2.0, 3.0})
    CHECK(lp_norm(f, p) == doctest::Approx(std::pow(p, -0.5 / p)).epsilon(1e-12));
  CHECK(lp_norm(f, HUGE_VAL) == doctest::Approx(1.0));
}

TEST_CASE("translate and modulate") {
  const Grid g = make_grid(1, 8.0, 32);
  const GridFunction f = sample(Gaussian{1.0}, g);
  const GridFunction t = translate(f, {3, 0});
  CHECK(t[19] == f[16]);
  CHECK(translate(t, {-3, 0})[5] == f[5]);
  const GridFunction m = modulate(f, {2, 0});
  const GridFunction mh = fourier_transform(m);
  const GridFunction fh = fourier_transform(f);
  // Modulation by k/L shifts the spectrum by k dual cells.
  CHECK(std::abs(mh[18] - fh[16]) < 1e-12);
}

TEST_CASE("chirp sampling guard") {
  const Grid g = make_grid(1, 32.0, 16384);
  CHECK_NOTHROW(check_chirp_sampling(g, 0.5));
  CHECK_THROWS_AS(check_chirp_sampling(g, 0.1), NumericalError);
}

TEST_CASE("evolved gaussian at zero time is the datum") {
  const Grid g = make_grid(1, 8.0, 64);
  const GridFunction a = sample(EvolvedGaussian{cplx(1.5), 0.0}, g);
  const GridFunction b = sample(Gaussian{cplx(1.5)}, g);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-15);
}

TEST_CASE("non-finite samples are rejected") {
  const Grid g = make_grid(1, 1.0, 8);
  std::vector<cplx> v(8, 0.0);
  v[1] = NAN;
  CHECK_THROWS_AS(GridFunction(g, v), NumericalError);
  CHECK_THROWS_AS(GridFunction(g, std::vector<cplx>{1.0}), InvalidArgument);
}

TEST_CASE("mass outside a box") {
  const Grid g = make_grid(1, 8.0, 8);
  std::vector<cplx> v(8, 0.0);
  v[0] = 1.0;  // x = -4
  v[4] = 1.0;  // x = 0
  const GridFunction f(g, v);
  CHECK(mass_outside_box(f, 3.0) == doctest::Approx(0.5));
}
