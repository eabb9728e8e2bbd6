#pragma once

#include <cstddef>
#include <functional>

namespace pairlab {

/// Worker count: requested if nonzero, else PAIRLAB_THREADS, else the
/// hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested);

/// Runs fn(0..n-1) on a pool of the given size; blocks until done.
/// Exceptions from workers are rethrown (first one wins).
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace pairlab
