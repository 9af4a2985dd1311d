#pragma once

#include <cstddef>
#include <functional>

namespace wam {

/// Number of workers used by parallel_for. Defaults to the AMALGAM_THREADS
/// environment variable when set, otherwise std::thread::hardware_concurrency().
std::size_t worker_count();

/// Overrides worker_count() for the rest of the process; 0 restores the default.
void set_worker_count(std::size_t n);

/// Calls body(i) for every i in [0, n). Work is split into contiguous blocks,
/// one per worker; body must only write to state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace wam
