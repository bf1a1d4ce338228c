// Copyright 2026 The bcs-entangle Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bcs::detail {

/// Calls fn(i) for i in [0, n) on a small worker pool. Each index is handled
/// exactly once. If any call throws, remaining work is abandoned and the
/// exception from the lowest failing index seen is rethrown here.
template <class Fn>
void parallel_for_index(std::size_t n, Fn&& fn, unsigned workers = 0) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failed_index = n;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (i < failed_index) {
              failure = std::current_exception();
              failed_index = i;
            }
            next = n;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace bcs::detail
