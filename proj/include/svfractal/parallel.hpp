#ifndef SVFRACTAL_PARALLEL_HPP
#define SVFRACTAL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace svf {

// Worker count: SVFRACTAL_THREADS when set, hardware concurrency otherwise.
unsigned thread_count();

// Static-chunked parallel loop over [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk_fn);

}  // namespace svf

#endif
