#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace qpascal::detail {

// Runs fn(i) for every i in [0, count), spread over hardware threads.
// fn must only touch state owned by index i; assembly order is fixed by the
// caller's storage, so results are deterministic regardless of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  if (hw <= 1 || count < 32) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(hw, count));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace qpascal::detail
