#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace narayana {

// Worker count resolution: explicit request > NARAYANA_JOBS > hardware.
inline unsigned resolve_jobs(long requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("NARAYANA_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Runs fn(i) for i in [0, count) across workers. Results must be written to
// index i of a preallocated buffer inside fn, which keeps output order
// deterministic regardless of scheduling.
template <typename Fn>
void parallel_for(size_t count, long jobs, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<size_t>(resolve_jobs(jobs), count ? count : 1));
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([count, workers, w, &fn] {
      for (size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace narayana
