#pragma once

#include <cstddef>
#include <functional>

namespace revival {

// Worker count: REVIVAL_THREADS environment variable if set (>= 1),
// otherwise std::thread::hardware_concurrency().
int worker_count();

// Runs fn(i) for i in [0, n) across workers with a static partition.
// fn must only touch per-index state; the first exception thrown by a
// worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace revival
