#pragma once

#include <functional>

namespace conelab {

// Worker count: CONELAB_THREADS when set (clamped to >= 1), otherwise the
// hardware concurrency.
int thread_budget();

// Runs fn(i) for i in [0, count) on up to thread_budget() threads. Callers
// must write results into per-index slots so the outcome is independent of
// scheduling. Exceptions from fn propagate to the caller.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace conelab
