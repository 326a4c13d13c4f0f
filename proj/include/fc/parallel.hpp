#ifndef FC_PARALLEL_HPP
#define FC_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace fc {

// Partition [0, n) into contiguous blocks and run fn(lo, hi) on each,
// using at most nthreads worker threads. Callers must write results to
// disjoint slots indexed by position so the outcome is identical for
// every thread count.
void parallel_blocks(int64_t n, int nthreads,
                     const std::function<void(int64_t, int64_t)>& fn);

}  // namespace fc

#endif
