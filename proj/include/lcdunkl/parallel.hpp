#pragma once

#include <cstddef>
#include <functional>

namespace lcd {

// Number of worker threads used by row-parallel loops. 1 means run inline.
void set_workers(int n);
int workers();

// Calls body(i) for i in [0, n). Each index is handled by exactly one worker,
// so results written per index do not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lcd
