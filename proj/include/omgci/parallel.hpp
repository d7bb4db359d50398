#pragma once

#include <cstddef>
#include <functional>

namespace omgci {

/// Worker count: hardware concurrency, capped by OMG_COHINFO_THREADS if set.
unsigned worker_count();

/// Calls body(i) for i in [0, n) across worker_count() threads. Each index is
/// visited exactly once; callers write results by index. The first exception
/// thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace omgci
