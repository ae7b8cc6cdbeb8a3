#pragma once

#include <cstddef>
#include <functional>

namespace coast {

// Worker cap: COAST_THREADS env var, else hardware concurrency (max 8).
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Work items must write only to their own output
// slot; reductions happen after the join, in index order, so results do not
// depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace coast
