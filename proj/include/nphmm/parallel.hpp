#ifndef NPHMM_PARALLEL_HPP
#define NPHMM_PARALLEL_HPP

#include <functional>

namespace nphmm {

/// Worker count: the value set by set_thread_count, else NPHMM_THREADS, else
/// the hardware concurrency.
int thread_count();
void set_thread_count(int n);

/// Runs fn(i) for i in [0, n) on up to thread_count() threads. Indices are
/// handed out dynamically; callers must not depend on execution order. The
/// first exception thrown by any task is rethrown after all workers join.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace nphmm

#endif  // NPHMM_PARALLEL_HPP
