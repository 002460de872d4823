#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace fpc::detail {

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, n) and returns the result for the smallest i that
// produced one, so the answer matches a sequential scan. Indices beyond the
// best hit found so far are skipped.
template <typename T, typename Fn>
std::optional<T> first_hit(std::size_t n, unsigned jobs, Fn&& fn) {
  jobs = resolve_jobs(jobs);
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      if (auto r = fn(i)) return r;
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  std::mutex mu;
  std::optional<T> result;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n || i >= best.load(std::memory_order_relaxed)) return;
      if (auto r = fn(i)) {
        std::lock_guard lock(mu);
        if (i < best.load(std::memory_order_relaxed)) {
          best.store(i, std::memory_order_relaxed);
          result = std::move(r);
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  pool.reserve(count);
  for (unsigned k = 0; k < count; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return result;
}

}  // namespace fpc::detail
