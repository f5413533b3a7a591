#pragma once

#include <cstddef>
#include <functional>

namespace farkas {

/// Worker cap: FARKAS_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Splits [begin, end) into chunks of `min_chunk` dealt round-robin to the
/// workers and runs body(lo, hi) on each. Runs inline when the range is
/// small or only one worker is available. Worker exceptions are rethrown.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 256);

}  // namespace farkas
