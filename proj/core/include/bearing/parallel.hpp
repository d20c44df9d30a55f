#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace bearing {

// Worker count: BEARING_NUM_THREADS caps it, 0/unset means hardware default.
inline int worker_count(int requested = 0) {
  int n = requested;
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("BEARING_NUM_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0 && cap < n) n = cap;
  }
  return n;
}

// Static block partition of [0, n). The callback sees (begin, end, worker).
// Callers that need deterministic output must merge per-worker results in
// index order themselves; the partition is deterministic for a given
// (n, workers) pair.
inline void parallel_blocks(std::int64_t n, int workers,
                            const std::function<void(std::int64_t, std::int64_t, int)>& fn) {
  if (n <= 0) return;
  if (workers > n) workers = static_cast<int>(n);
  if (workers <= 1) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t b = w * chunk;
    const std::int64_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e, w] { fn(b, e, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace bearing
