#pragma once

#include <cstddef>
#include <functional>

namespace atomsep {

// Worker count for grid sweeps: ATOMSEP_THREADS if set, otherwise the
// hardware concurrency. Results are written to per-index slots, so the
// output is identical for any thread count.
std::size_t worker_count();

// Runs fn(i) for i in [0, n), possibly concurrently.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace atomsep
