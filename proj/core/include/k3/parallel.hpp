#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace k3 {

/// Worker count for data-parallel loops: hardware concurrency, at least 1.
inline unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

/// out[i] = fn(i) for i < n, spread over `workers` threads. Results are
/// stored by index, so the output does not depend on scheduling. The first
/// exception thrown by fn is rethrown after all workers stop.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn, unsigned workers = default_workers())
    -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  const unsigned count = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < count; ++t) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace k3
