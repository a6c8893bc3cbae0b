#pragma once

#include <functional>

namespace patsym {

// Runs task(0), ..., task(count-1) on at most `threads` workers. Tasks must
// not touch shared mutable state except through their own index. The first
// exception thrown by any task is rethrown on the calling thread.
void run_parallel(int count, int threads, const std::function<void(int)>& task);

// PATSYM_THREADS when set, otherwise the hardware concurrency (at least 1).
int default_thread_count();

}  // namespace patsym
