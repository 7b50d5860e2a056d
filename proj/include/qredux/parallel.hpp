#pragma once

#include <cstddef>
#include <functional>

namespace qredux {

/// Worker count: QREDUX_THREADS if set (>=1), else hardware concurrency.
unsigned thread_count();

/// Runs fn(i) for i in [begin, end) across worker threads with static
/// chunking. Falls back to a plain loop for one worker or tiny ranges.
/// fn must not touch shared mutable state.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn);

} // namespace qredux
