#pragma once

#include <cstddef>
#include <functional>

namespace meshfield {

// Worker count: min(hardware threads, M2NF_THREADS). At least 1.
int worker_count();

// Runs fn(i) for i in [0, n) on worker_count() threads with a static
// partition. fn must write disjoint outputs; the result is independent of
// the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Runs fn(chunk) for chunk in [0, n_chunks). Each chunk executes on exactly
// one thread, so per-chunk sequential accumulation stays deterministic.
void parallel_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& fn);

}  // namespace meshfield
