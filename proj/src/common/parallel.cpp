// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/common/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <vector>

namespace hopflift {

int thread_count() {
  if (const char* env = std::getenv("HOPFLIFT_THREADS"); env != nullptr) {
    int value = 0;
    const char* last = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, last, value);
    if (ec == std::errc() && ptr == last && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (end <= begin) return;
  const std::size_t total = end - begin;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(thread_count()), total);
  if (workers <= 1 || total < 64) {
    body(begin, end);
    return;
  }
  const std::size_t chunk = (total + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t lo = begin + w * chunk;
    const std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  body(begin, std::min(end, begin + chunk));
}

}  // namespace hopflift
