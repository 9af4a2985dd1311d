#include <cmath>

#include "doctest.h"
#include "wam/error.hpp"
#include "wam/experiments.hpp"

using namespace wam;

TEST_CASE("decay fit recovers a power law") {
  const auto ts = geometric_points(2.0, 32.0, 5);
  CHECK(ts.front() == doctest::Approx(2.0));
  CHECK(ts.back() == doctest::Approx(32.0));
  CHECK(ts[2] == doctest::Approx(8.0));
  std::vector<double> ns;
  for (double t : ts) ns.push_back(3.0 * std::pow(t, -0.75));
  const DecayFit f = fit_decay(ts, ns);
  CHECK(f.slope == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK(std::exp(f.intercept) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(f.residual < 1e-12);
  CHECK_THROWS_AS(fit_decay(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2, 3}),
                  InvalidArgument);
}

TEST_CASE("admissible pairs") {
  CHECK(make_admissible_pair(8.0, 4.0, 1).q == 8.0);
  CHECK(make_admissible_pair(4.0, 4.0, 2).endpoint());
  CHECK_FALSE(make_admissible_pair(HUGE_VAL, 2.0, 1).endpoint());
  CHECK_THROWS_AS(make_admissible_pair(8.0, 3.0, 1), InvalidArgument);
  CHECK_THROWS_AS(make_admissible_pair(2.0, HUGE_VAL, 1), InvalidArgument);
  // In d=1 every admissible pair has q >= 4; q < 4 needs d=2 and exploratory mode.
  CHECK(make_admissible_pair(3.0, 6.0, 2, true).q == 3.0);
  CHECK_THROWS_AS(make_admissible_pair(3.0, 6.0, 2), InvalidArgument);
}

TEST_CASE("chirp norms on a small grid") {
  ChirpNormConfig cfg;
  cfg.a_values = {1.0, 2.0};
  cfg.points = 4096;
  const auto rep = verify_chirp_norm(cfg);
  CHECK(rep.pass());
  REQUIRE(rep.find("norm_a=1") != nullptr);
  // ((1 + a^2) / a^4)^{1/4} at a = 1.
  CHECK(rep.find("norm_a=1")->reference == doctest::Approx(std::pow(2.0, 0.25)));
}

TEST_CASE("an aliasing chirp is a numerical error") {
  ChirpNormConfig cfg;
  cfg.a_values = {0.01};
  cfg.points = 1024;
  CHECK_THROWS_AS(verify_chirp_norm(cfg), NumericalError);
}

TEST_CASE("fixed-time slopes on a coarse grid") {
  FixedTimeConfig cfg;
  cfg.t_lo = 4.0;
  cfg.t_hi = 16.0;
  cfg.n_points = 4;
  cfg.extent = 1024.0;
  cfg.points = 8192;
  const auto rep = fixed_time_amalgam_experiment(cfg);
  CHECK(rep.pass());
}

TEST_CASE("strichartz anchor pair") {
  StrichartzConfig cfg;
  cfg.pair = {HUGE_VAL, 2.0, 1};
  cfg.c_values = {0.5, 1.0};
  const auto rep = strichartz_ratio_experiment(cfg);
  REQUIRE(rep.find("anchor_ratio_c=1") != nullptr);
  CHECK(rep.find("anchor_ratio_c=1")->pass);
  CHECK(rep.find("anchor_ratio_c=0.5")->pass);
}

TEST_CASE("strichartz preconditions") {
  StrichartzConfig cfg;
  cfg.pair = {4.0, HUGE_VAL, 1};
  CHECK_THROWS_AS(strichartz_ratio_experiment(cfg), InvalidArgument);
  cfg.exploratory = true;
  cfg.c_values = {1.0};
  const auto rep = strichartz_ratio_experiment(cfg);
  CHECK(rep.checks.empty());
  CHECK(rep.diagnostics.contains("table"));
}

TEST_CASE("holder experiment is reproducible") {
  HolderConfig cfg;
  cfg.n_samples = 6;
  const auto a = holder_duality_experiment(cfg);
  const auto b = holder_duality_experiment(cfg);
  CHECK(a.pass());
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("bupu experiment") {
  const auto rep = bupu_check_experiment(bupu_check_defaults(1));
  CHECK(rep.pass());
}

TEST_CASE("potential experiment and class enforcement") {
  PotentialConfig cfg;
  cfg.points = 512;
  CHECK(potential_experiment(cfg).pass());
  cfg.claimed_alpha = 1.0;
  cfg.claimed_p = 1.0;
  CHECK_THROWS_AS(potential_experiment(cfg), InvalidArgument);
}

TEST_CASE("phi alpha checks beyond the slope") {
  PhiAlphaConfig cfg;
  cfg.alphas = {0.25};
  cfg.points = 8192;
  cfg.profile_points = 2048;
  cfg.profile_ranges = {32.0, 64.0};
  const auto rep = phi_alpha_tail_experiment(cfg);
  CHECK(rep.find("tail_bound_ratio_alpha=0.25")->pass);
  CHECK(rep.find("monotone_violations_alpha=0.25")->pass);
  CHECK(rep.find("membership_growth_alpha=0.25")->pass);
}

TEST_CASE("boundary mass sees the outer band") {
  const Grid g = make_grid(1, 16.0, 16);
  std::vector<cplx> v(16, 0.0);
  v[0] = 1.0;  // x = -8, inside the outer L/16 band
  v[8] = 1.0;
  CHECK(boundary_mass(GridFunction(g, v)) == doctest::Approx(0.5));
}
