#pragma once

#include <cstddef>
#include <functional>

namespace herzscope {

/// Number of worker threads to use, capped by the HERZSCOPE_THREADS
/// environment variable (default: hardware concurrency, at least 1).
std::size_t thread_budget();

/// Runs fn(i) for i in [0, n) with static chunking over the thread budget.
/// Each index is processed exactly once by exactly one thread, so results
/// written to disjoint slots are deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace herzscope
