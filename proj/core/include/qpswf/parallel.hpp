#pragma once

#include <cstddef>
#include <functional>

namespace qpswf {

// Worker count: QPSWF_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t max_threads();

// Runs body(i) for i in [0, n). Indices are split into contiguous blocks, one
// per worker, so results written to slot i do not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qpswf
