#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wam/amalgam.hpp"
#include "wam/report.hpp"

namespace wam {

/// Least-squares line through (log t, log norm).
struct DecayFit {
  std::vector<double> log_t;
  std::vector<double> log_norm;
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // max |log_norm - fitted line|
};

/// Throws InvalidArgument for fewer than 4 points or nonpositive inputs.
DecayFit fit_decay(std::span<const double> ts, std::span<const double> norms);

/// n points geometrically spaced on [lo, hi], endpoints included.
std::vector<double> geometric_points(double lo, double hi, std::size_t n);

/// (q, r) with 2/q + d/r = d/2.
struct AdmissiblePair {
  double q = 8.0;
  double r = 4.0;
  int dim = 1;

  /// (4, 2d/(d-1)) for d > 1.
  bool endpoint() const;
};

/// Throws InvalidArgument unless the pair is admissible with q >= 4 and r >= 2;
/// exploratory pairs may have 2 <= q < 4.
AdmissiblePair make_admissible_pair(double q, double r, int dim, bool exploratory = false);

struct ChirpNormConfig {
  int dim = 1;
  std::vector<double> a_values{0.5, 1.0, 2.0, 4.0, 8.0};
  double extent = 32.0;
  std::size_t points = 16384;
  double tol = 0.02;
};
ChirpNormConfig chirp_norm_defaults(int dim);
ExperimentReport verify_chirp_norm(const ChirpNormConfig& cfg);

struct DispersiveConfig {
  int dim = 1;
  double small_lo = 0.02, small_hi = 0.2;
  double large_lo = 8.0, large_hi = 64.0;
  std::size_t n_points = 8;
  double small_extent = 32.0;
  std::size_t small_points = 16384;
  double large_extent = 4096.0;
  std::size_t large_points = 32768;
};
DispersiveConfig dispersive_defaults(int dim);
ExperimentReport dispersive_experiment(const DispersiveConfig& cfg);

struct FixedTimeConfig {
  int dim = 1;
  std::vector<double> r_values{2.0, 4.0, kInf};
  double t_lo = 8.0, t_hi = 64.0;
  std::size_t n_points = 8;
  double extent = 4096.0;
  std::size_t points = 32768;
};
ExperimentReport fixed_time_amalgam_experiment(const FixedTimeConfig& cfg);

struct PhiAlphaConfig {
  std::vector<double> alphas{0.25, 0.4};
  std::vector<double> x_values{4.0, 8.0, 16.0, 32.0, 64.0};
  std::size_t points = 65536;          // samples on each [x - 1, x + 1]
  std::size_t profile_points = 16384;  // samples per piece for the membership profile
  std::vector<double> profile_ranges{64.0, 256.0};
};
ExperimentReport phi_alpha_tail_experiment(const PhiAlphaConfig& cfg);

struct StrichartzConfig {
  AdmissiblePair pair;
  bool exploratory = false;
  std::vector<double> c_values{0.25, 0.5, 1.0, 2.0, 4.0};
  /// Truncation [-T, T]; unset means T = time_scale * c for the datum gaussian(c).
  std::optional<double> T;
  double time_scale = 4.0;
  /// dt is the largest time_step / 2^k not above c / dt_divisor.
  double dt_divisor = 16.0;
  double time_step = 0.25;
  double extent = 256.0;
  std::size_t points = 4096;
};
StrichartzConfig strichartz_defaults(int dim, bool endpoint);
ExperimentReport strichartz_ratio_experiment(const StrichartzConfig& cfg);

struct HolderConfig {
  std::size_t n_samples = 100;
  std::uint64_t seed = 1;
  double s = 2.0, q = 4.0, r = 8.0 / 3.0;
  double extent = 16.0;
  std::size_t points = 256;
  std::size_t time_samples = 32;
  double dt = 0.125;
  double time_step = 0.25;
};
ExperimentReport holder_duality_experiment(const HolderConfig& cfg);

struct BupuCheckConfig {
  int dim = 1;
  double extent = 32.0;
  std::size_t points = 1024;
  double spacing = 1.0;
  std::vector<double> c_values{0.25, 0.5, 1.0, 2.0, 4.0};
  double p = 2.0;
};
/// d=2 uses a 16 x 16 torus at 128 points per axis so the 256 stored translates stay small.
BupuCheckConfig bupu_check_defaults(int dim);
ExperimentReport bupu_check_experiment(const BupuCheckConfig& cfg);

struct PotentialConfig {
  double extent = 64.0;
  std::size_t points = 1024;
  double c = 1.0;  // initial datum gaussian(c)
  double T = 1.0;
  double dt = 0.05;
  AdmissiblePair pair;
  double claimed_alpha = 2.0;
  double claimed_p = kInf;
};
ExperimentReport potential_experiment(const PotentialConfig& cfg);

/// Fraction of sum |f|^2 at nodes within extent/16 of the torus boundary.
double boundary_mass(const GridFunction& f);

}  // namespace wam
