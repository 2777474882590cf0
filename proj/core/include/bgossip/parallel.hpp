#pragma once

#include <cstddef>
#include <functional>

namespace bgossip {

/// Worker count used when callers pass 0: the hardware concurrency, at least 1.
int default_workers();

/// Runs body(i) for i in [0, count) on `workers` threads (0 = default).
/// Callers write results into slots indexed by i, so output never depends on
/// scheduling. The first exception thrown by any body is rethrown after all
/// threads join.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

}  // namespace bgossip
