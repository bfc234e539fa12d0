#pragma once

#include <cstddef>
#include <functional>

namespace percite {

// Worker count resolution: PERCITE_THREADS env var if set, otherwise the
// hardware concurrency (at least 1).
int default_thread_count();

// Runs fn(i) for every i in [0, n). Tasks are pulled off a shared counter, so
// the schedule is nondeterministic; callers must write results into slots
// keyed by i. With threads <= 1 the loop runs inline.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace percite
