// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace nwidth {

/// Worker count: NWIDTH_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
int worker_count();

/// Runs body(i) for i in [0, n) split into contiguous chunks across
/// worker_count() threads. Each index is visited exactly once; callers write
/// to disjoint outputs so the result does not depend on the split.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace nwidth
