#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace rieszlab {

/// Runs fn(begin, end) over disjoint blocks of [0, n) on up to n_threads
/// threads (0 = hardware concurrency).  Each block is processed sequentially,
/// so per-element work that only writes to its own slot stays deterministic
/// regardless of the thread count.
inline void parallel_for_blocks(std::int64_t n,
                                const std::function<void(std::int64_t, std::int64_t)>& fn,
                                int n_threads = 0) {
  if (n <= 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  int workers = n_threads > 0 ? n_threads : (hw > 0 ? static_cast<int>(hw) : 1);
  workers = static_cast<int>(std::min<std::int64_t>(workers, n));
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min<std::int64_t>(lo + chunk, n);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace rieszlab
