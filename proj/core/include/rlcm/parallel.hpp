#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace rlcm {

// Worker count: min(hardware, RLCM_KMS_THREADS) with a floor of 1.
inline unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RLCM_KMS_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

// Index-parallel map with deterministic result order.
template <typename Fn>
void parallel_for(size_t count, Fn&& fn) {
  unsigned workers = std::min<size_t>(thread_budget(), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace rlcm
