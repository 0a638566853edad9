#ifndef GSA_PARALLEL_HPP
#define GSA_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace gsa {

/// Parallelism degree: GSA_THREADS env var, else hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("GSA_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

/// Run fn(i) for i in [0, n). Each index owns its output slot, so results
/// are identical to the sequential order regardless of thread count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  unsigned nt = thread_count();
  if (nt <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  nt = static_cast<unsigned>(std::min<std::size_t>(nt, n));
  std::vector<std::thread> pool;
  pool.reserve(nt);
  std::size_t chunk = (n + nt - 1) / nt;
  for (unsigned t = 0; t < nt; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace gsa

#endif
