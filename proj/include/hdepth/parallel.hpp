#pragma once

// Deterministic fork-join helper: indices are split into contiguous chunks,
// one thread per chunk, and callers write results into index-addressed
// storage, so the outcome never depends on scheduling.

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hdepth {

template <class Fn>
void parallel_for_index(std::uint64_t count, int jobs, Fn&& fn) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::uint64_t workers =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), count);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::mutex err_mutex;
  std::exception_ptr first_error;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = count * w / workers;
    const std::uint64_t hi = count * (w + 1) / workers;
    threads.emplace_back([&, lo, hi] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hdepth
