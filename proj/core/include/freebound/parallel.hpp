#pragma once

#include <cstddef>
#include <functional>

namespace freebound {

/// Worker count: FREEBOUND_THREADS if set to a positive integer, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. The first
/// exception thrown by any body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace freebound
