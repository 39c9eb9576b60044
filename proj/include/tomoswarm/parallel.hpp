#pragma once

#include <cstddef>
#include <functional>

namespace tomoswarm {

/// Worker count: TOMOSWARM_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index
/// is processed exactly once; the first exception thrown is rethrown.
/// Calls made from inside a running region execute serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tomoswarm
