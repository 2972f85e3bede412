#pragma once

#include <functional>

namespace hicofore {

/// Number of worker threads to use, capped by the HICOFORE_THREADS
/// environment variable when set.
int thread_budget();

/// Runs fn(begin, end) over a partition of [0, n). Work items must write to
/// disjoint output slots; the partition is contiguous, so results do not
/// depend on the thread count.
void parallel_for(int n, const std::function<void(int, int)>& fn);

}  // namespace hicofore
