#pragma once

// Minimal fork-join helper. Work is split into caller-defined tasks whose
// results the caller combines in task order, so the thread count never changes
// numeric output.

#include <cstddef>
#include <functional>

namespace wnear {

/// Number of worker threads used by parallel_for. 0 means hardware concurrency.
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Runs body(i) for i in [0, tasks). Exceptions from any task are rethrown
/// (the first one by task index).
void parallel_for(std::size_t tasks, const std::function<void(std::size_t)>& body);

}  // namespace wnear
