#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace permcycle {

/// Worker count: `requested` if nonzero, else PERMCYCLE_THREADS if set and
/// nonzero, else the hardware concurrency.
unsigned worker_count(unsigned requested = 0);

/// Runs body(worker, begin, end) on contiguous slices of [0, n).
template <typename Body>
void parallel_slices(std::size_t n, unsigned workers, Body&& body) {
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    body(0u, std::size_t{0}, n);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
}

}  // namespace permcycle
