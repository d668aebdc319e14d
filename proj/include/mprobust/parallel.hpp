#pragma once

#include <cstddef>
#include <functional>

namespace mprobust {

/// Runs fn(0..task_count-1) on up to `jobs` worker threads pulling from a
/// shared counter. Tasks must be independent; any exception is rethrown on the
/// calling thread after all workers finish.
void run_tasks(unsigned jobs, std::size_t task_count,
               const std::function<void(std::size_t)>& fn);

} // namespace mprobust
