#include "fc/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace fc {

void parallel_blocks(int64_t n, int nthreads,
                     const std::function<void(int64_t, int64_t)>& fn) {
  nthreads = std::max(1, nthreads);
  if (n <= 0) return;
  if (nthreads == 1 || n < 2) {
    fn(0, n);
    return;
  }
  int64_t k = std::min<int64_t>(nthreads, n);
  std::vector<std::thread> ts;
  for (int64_t i = 0; i < k; ++i) {
    int64_t lo = n * i / k;
    int64_t hi = n * (i + 1) / k;
    ts.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : ts) t.join();
}

}  // namespace fc
