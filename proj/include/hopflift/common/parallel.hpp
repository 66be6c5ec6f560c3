// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace hopflift {

// Worker count: HOPFLIFT_THREADS if set to a positive integer, otherwise
// the hardware concurrency (at least 1).
int thread_count();

// Runs body(lo, hi) over disjoint contiguous chunks covering [begin, end).
// Chunks write disjoint outputs only; reductions stay with the caller so that
// results never depend on the worker count.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hopflift
