#pragma once

#include <cstddef>
#include <functional>

namespace tropikit {

// Upper bound on worker threads used by data-parallel loops. Defaults to 1.
void set_max_threads(std::size_t n);
std::size_t max_threads();

// Calls body(i) for every i in [0, n). Each index is handled by exactly one
// thread, so results written per index are independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace tropikit
