#pragma once

#include <cstddef>
#include <functional>

namespace abreu {

// Worker count: hardware concurrency capped by ABREU_THREADS when set.
unsigned worker_count();

// Runs body(begin, end) over contiguous chunks of [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace abreu
