#pragma once

#include <functional>

namespace berezin {

// Worker count for the scans and verification suites: BEREZIN_THREADS when
// set and positive, otherwise the hardware concurrency.
int worker_count();

// Runs fn(i) for every i in [begin, end), splitting the range across
// workers.  Each index is handled exactly once; callers keep one result slot
// per index, so merged output does not depend on the schedule.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}
