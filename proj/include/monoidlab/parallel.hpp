// Minimal block-parallel loop.  Work items are processed in disjoint
// index ranges; callers combine per-thread results in index order so that
// outputs do not depend on the thread count.

#ifndef MONOIDLAB_PARALLEL_HPP_
#define MONOIDLAB_PARALLEL_HPP_

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace monoidlab {

inline unsigned default_threads() {
  if (char const* env = std::getenv("MONOIDLAB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) {
      return static_cast<unsigned>(n);
    }
  }
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

// fn(thread_id, begin, end) over a partition of [0, n)
template <typename Fn>
void parallel_ranges(size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    fn(0u, size_t{0}, n);
    return;
  }
  threads = std::min<size_t>(threads, n);
  std::vector<std::thread> pool;
  size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    size_t b = t * chunk, e = std::min(n, b + chunk);
    if (b >= e) {
      break;
    }
    pool.emplace_back([&fn, t, b, e] { fn(t, b, e); });
  }
  for (auto& th : pool) {
    th.join();
  }
}

}  // namespace monoidlab

#endif  // MONOIDLAB_PARALLEL_HPP_
