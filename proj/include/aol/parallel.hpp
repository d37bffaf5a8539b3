#pragma once

#include <cstddef>
#include <functional>

namespace aol {

/// Worker count: hardware concurrency, capped by the AOL_THREADS environment variable.
unsigned worker_count();

/// Runs task(i) for i in [0, count) on up to worker_count() threads.
/// Tasks must write only to their own slot; callers reduce in index order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace aol
