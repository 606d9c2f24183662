#pragma once

#include <functional>

namespace mopuc {

// Thread budget: MOPUC_THREADS when set (>= 1), else hardware concurrency.
int max_threads();

// fn(i) for i in [0, count), spread over at most max_threads() threads.
// The first exception thrown by any task is rethrown after all tasks finish.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace mopuc
