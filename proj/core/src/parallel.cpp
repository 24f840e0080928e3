#include "triobs/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace triobs {

int max_threads() {
  if (const char* env = std::getenv("TRIOBS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_chunks(std::size_t n, std::size_t chunk,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  if (chunk == 0) chunk = 1;
  const std::size_t n_chunks = (n + chunk - 1) / chunk;
  const int workers = std::min<std::size_t>(max_threads(), n_chunks);

  if (workers <= 1) {
    for (std::size_t ci = 0; ci < n_chunks; ++ci)
      fn(ci, ci * chunk, std::min(n, (ci + 1) * chunk));
    return;
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t ci = next.fetch_add(1);
      if (ci >= n_chunks) return;
      fn(ci, ci * chunk, std::min(n, (ci + 1) * chunk));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
}

}  // namespace triobs
