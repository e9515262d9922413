#pragma once

#include <cstddef>
#include <functional>

namespace hsball {

/// Thread count resolution: a positive request wins, otherwise the HS_THREADS
/// environment variable, otherwise the hardware concurrency (at least 1).
int resolve_threads(int requested);

/// Runs chunk_fn(begin, end) over a static partition of [0, count). Results
/// must be written to disjoint slots so the outcome matches sequential
/// evaluation exactly.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, std::size_t)>& chunk_fn);

}  // namespace hsball
