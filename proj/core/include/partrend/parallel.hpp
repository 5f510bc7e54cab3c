#pragma once

#include <cstdint>
#include <functional>

namespace partrend {

// Worker count resolution: explicit value if > 0, otherwise the
// PARTREND_WORKERS environment variable, otherwise hardware concurrency.
int resolve_workers(int requested);

// Runs fn(i) for i in [0, n) on up to `workers` threads. Each index is
// processed exactly once; results must be written to per-index slots so
// the outcome is independent of scheduling. Exceptions from workers are
// rethrown on the calling thread.
void parallel_for(int64_t n, int workers, const std::function<void(int64_t)>& fn);

}  // namespace partrend
