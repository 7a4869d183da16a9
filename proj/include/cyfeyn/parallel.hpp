#pragma once

#include <functional>

namespace cyfeyn {

// Runs fn(i) for i = 0..n-1 on at most `jobs` threads, each thread owning a
// contiguous index block. Callers write results into per-index slots only, so
// the outcome is independent of the thread count; jobs <= 1 degenerates to a
// plain loop. The first exception (lowest index block) is rethrown after all
// threads join.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

} // namespace cyfeyn
