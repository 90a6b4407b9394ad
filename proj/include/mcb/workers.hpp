#pragma once

#include <functional>

namespace mcb {

// Number of workers for parallel sections: the MCBOUNDS_WORKERS environment
// variable if set to a positive integer, otherwise the hardware concurrency.
int worker_count();

// Runs body(i) for every i in [0, n). Work is distributed over workers in
// fixed-size chunks; the chunking does not depend on the worker count, and
// callers must write results into per-index slots (or accumulate values whose
// combination is order-independent) so that output is schedule-independent.
// Exceptions thrown by body are rethrown on the calling thread.
void parallel_for(long n, const std::function<void(long)>& body);

}  // namespace mcb
