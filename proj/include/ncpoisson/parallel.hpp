#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ncpoisson {

/// Runs fn(begin, end, chunk) over a partition of [0, n) into at most
/// `jobs` contiguous chunks.  Chunk boundaries depend only on n and jobs,
/// and callers merge per-chunk results in chunk order, so results are
/// identical for every jobs value.
inline void parallel_chunks(size_t n, int jobs,
                            const std::function<void(size_t, size_t, size_t)>& fn) {
  if (n == 0) return;
  size_t workers = jobs < 1 ? 1 : static_cast<size_t>(jobs);
  if (workers > n) workers = n;
  if (workers == 1) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  size_t base = n / workers;
  size_t extra = n % workers;
  size_t begin = 0;
  for (size_t c = 0; c < workers; ++c) {
    size_t len = base + (c < extra ? 1 : 0);
    size_t end = begin + len;
    threads.emplace_back([&fn, begin, end, c] { fn(begin, end, c); });
    begin = end;
  }
  for (auto& t : threads) t.join();
}

} // namespace ncpoisson
