#pragma once

#include <array>
#include <vector>

#include "wam/amalgam.hpp"
#include "wam/grid.hpp"

namespace wam {

/// Bounded uniform partition of unity on the torus.
///
/// chi is a smooth bump equal to 1 on [-s/2, s/2]^d and vanishing outside
/// (-s, s)^d; phi_a = T_a chi / Phi with Phi = sum_a T_a chi >= 1. The companion
/// psi_a equals 1 on [-s, s]^d, which contains supp phi_a, and vanishes outside
/// (-2s, 2s)^d. Translates a run over the lattice s Z^d.
struct Bupu {
  Grid grid;
  double spacing;
  std::vector<std::array<std::size_t, 2>> nodes;  // grid index of each translate center
  std::vector<GridFunction> phis;
  std::vector<GridFunction> psis;
};

/// Throws InvalidArgument unless spacing is a multiple of the grid spacing that
/// divides the extent, supp phi spans at least 8 cells, and at least four
/// translates fit per axis.
Bupu build_bupu(const Grid& grid, double spacing);

/// Largest number of beta with supp psi_beta meeting supp phi_alpha, over alpha;
/// supports are the nodes where the function is nonzero.
std::size_t max_overlap(const Bupu& b);

/// {f phi_a}.
std::vector<GridFunction> analysis_S(const GridFunction& f, const Bupu& b);

/// sum_a u_a psi_a.
GridFunction synthesis_R(const std::vector<GridFunction>& u, const Bupu& b);

/// (sum_a s^d ||f phi_a||_B^p)^{1/p}; the FL components use the full-grid transform.
double bupu_amalgam_norm(const GridFunction& f, const LocalNormSpec& local, double p,
                         const Bupu& b);

}  // namespace wam
