#ifndef TRIOBS_PARALLEL_HPP_
#define TRIOBS_PARALLEL_HPP_

#include <cstddef>
#include <functional>
#include <vector>

// Deterministic fork-join helper.  Work is split into fixed-size chunks that
// are independent of the worker count, and per-chunk results are reduced in
// chunk order, so floating-point outputs do not depend on TRIOBS_THREADS.

namespace triobs {

// worker cap from TRIOBS_THREADS; 0 or unset means hardware concurrency
int max_threads();

// Runs fn(chunk_index, begin, end) over [0, n) in chunks of `chunk` items.
// fn must only touch state indexed by its chunk.
void parallel_chunks(std::size_t n, std::size_t chunk,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace triobs

#endif  // TRIOBS_PARALLEL_HPP_
