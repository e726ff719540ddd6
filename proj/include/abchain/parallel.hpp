#pragma once

#include <atomic>
#include <thread>
#include <vector>

#include "abchain/types.hpp"

namespace abchain {

// Worker count: explicit request > ABCHAIN_THREADS > hardware concurrency.
int resolve_thread_count(int requested);

// Runs body(i) for i in [0, n) on up to n_threads workers. Work items are
// claimed from a shared counter; outputs must be written to per-index slots so
// results do not depend on scheduling.
template <class Body>
void parallel_for_index(Index n, int n_threads, Body&& body) {
  n_threads = resolve_thread_count(n_threads);
  if (n_threads <= 1 || n <= 1) {
    for (Index i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<Index> next{0};
  auto worker = [&] {
    for (Index i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
  };
  std::vector<std::thread> pool;
  const int workers = static_cast<int>(std::min<Index>(n_threads, n));
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace abchain
