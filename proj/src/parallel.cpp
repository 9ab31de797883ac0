#include "svfractal/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace svf {

unsigned thread_count() {
  if (const char* env = std::getenv("SVFRACTAL_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& chunk_fn) {
  const unsigned workers = std::min<std::size_t>(thread_count(), n ? n : 1);
  if (workers <= 1 || n < 256) {
    chunk_fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t step = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * step;
    const std::size_t hi = std::min(n, lo + step);
    if (lo >= hi) break;
    pool.emplace_back(chunk_fn, lo, hi);
  }
  for (auto& th : pool) th.join();
}

}  // namespace svf
