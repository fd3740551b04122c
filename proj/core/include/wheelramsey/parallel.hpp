#pragma once

#include <functional>

namespace wheelramsey {

// 0 or negative selects std::thread::hardware_concurrency().
int resolve_threads(int requested);

// Runs body(i) for i in [0, count) on up to `threads` workers. The first
// exception thrown by any worker is rethrown after all workers join.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

}  // namespace wheelramsey
