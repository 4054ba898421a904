#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace pke {

/// Worker count for grid scans: PKE_MA_THREADS if set and positive,
/// otherwise the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs task(i) for i in [0, count) on up to `workers` threads. Each index is
/// run exactly once; the caller stores results by index, so the outcome does
/// not depend on scheduling. The first exception thrown by a task is
/// rethrown after all workers have joined.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task,
                  std::size_t workers = worker_count());

}  // namespace pke
