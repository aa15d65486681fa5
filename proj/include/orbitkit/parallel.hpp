#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace orbitkit {

/// Worker count: hardware concurrency, capped by ORBITKIT_THREADS when set (minimum 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Each index is visited
/// exactly once; the first exception thrown by any body is rethrown after all workers join.
/// Callers write results into per-index slots, so outcomes never depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace orbitkit
