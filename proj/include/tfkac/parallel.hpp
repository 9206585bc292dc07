#pragma once

#include <functional>

namespace tfkac {

/// Runs task(0..task_count-1) on up to `jobs` worker threads. Exceptions are
/// captured and rethrown after all workers finish. Callers own any output
/// slots; index-based assembly keeps results deterministic.
void parallel_for(int task_count, int jobs, const std::function<void(int)>& task);

} // namespace tfkac
