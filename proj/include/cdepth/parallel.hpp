#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cdepth {

/// Splits [0, count) into `threads` contiguous ranges and runs f(begin, end)
/// on each. Exceptions from workers are rethrown on the calling thread.
template <class F>
void parallel_ranges(std::size_t count, unsigned threads, F&& f) {
  threads = std::max(1U, threads);
  if (threads == 1 || count < 2) {
    f(std::size_t{0}, count);
    return;
  }
  const std::size_t parts = std::min<std::size_t>(threads, count);
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t begin = count * p / parts;
    const std::size_t end = count * (p + 1) / parts;
    pool.emplace_back([&, begin, end] {
      try {
        f(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace cdepth
