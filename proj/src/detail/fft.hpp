#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace wam::detail {

/// In-place unnormalized DFT over a dim-dimensional cube of side n.
/// sign = -1 is the forward transform sum_j x_j e^{-2 pi i jk/n}.
/// Safe to call concurrently; plans are cached per (dim, n, sign).
void dft(std::span<std::complex<double>> data, int dim, std::size_t n, int sign);

}  // namespace wam::detail
