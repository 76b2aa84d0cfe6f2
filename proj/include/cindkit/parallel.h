#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cindkit {

inline unsigned default_jobs() {
  if (const char* env = std::getenv("CINDKIT_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return static_cast<unsigned>(j);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

// Runs fn(i) for i in [0, n). Work is claimed through a shared counter, so
// results must be written to slot i; callers then reduce sequentially to keep
// output independent of the number of workers.
inline void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = jobs < n ? jobs : static_cast<unsigned>(n);
  pool.reserve(spawn);
  for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace cindkit
