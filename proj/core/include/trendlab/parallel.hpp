#pragma once

#include <cstddef>
#include <functional>

namespace trendlab {

/// Worker count actually used for `requested` (0 = available parallelism,
/// clamped to at least 1).
int resolve_threads(int requested);

/// Run fn(i) for i in [0, count) on up to `threads` workers. Each index is
/// processed exactly once; callers keep results order-independent by
/// writing to disjoint slots.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace trendlab
