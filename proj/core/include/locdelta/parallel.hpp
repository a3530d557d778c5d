#ifndef LOCDELTA_PARALLEL_HPP
#define LOCDELTA_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace locdelta {

/// 0 means "one worker per hardware thread".
inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs f(i) for i in [0, n) on up to `jobs` threads, in contiguous blocks.
/// Callers write results into per-index slots and reduce afterwards.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  const std::size_t workers = std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const std::size_t block = (n + workers - 1) / workers;
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(n, begin + block);
    if (begin >= end) break;
    threads.emplace_back([begin, end, &f] {
      for (std::size_t i = begin; i < end; ++i) f(i);
    });
  }
}

}  // namespace locdelta

#endif  // LOCDELTA_PARALLEL_HPP
