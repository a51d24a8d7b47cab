#pragma once

// Tiny work-pulling thread pool for independent trials. Results must be
// written to per-index slots by the body; aggregation stays order-independent,
// so worker count never affects output.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gardner {

inline constexpr const char* kWorkersEnvVar = "GARDNER_WORKERS";

inline int default_worker_count() {
  if (const char* env = std::getenv(kWorkersEnvVar)) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs body(0..count-1). workers <= 0 selects the default; a cancel flag stops
// claiming new indices. The first exception thrown by a body is rethrown.
inline void parallel_for(int count, int workers, const std::function<void(int)>& body,
                         const std::atomic<bool>* cancel = nullptr) {
  if (count <= 0) return;
  if (workers <= 0) workers = default_worker_count();
  workers = std::min(workers, count);

  if (workers == 1) {
    for (int i = 0; i < count; ++i) {
      if (cancel && cancel->load(std::memory_order_relaxed)) return;
      body(i);
    }
    return;
  }

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      if (cancel && cancel->load(std::memory_order_relaxed)) return;
      const int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gardner
