// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace curlcurl {

/// Worker count: CURLCURL_THREADS if set (clamped to >= 1), otherwise the
/// hardware concurrency capped at 8.
int worker_count();

/// Runs fn(i) for i in [0, n). Work is split into contiguous chunks over
/// disjoint outputs, so results do not depend on the worker count.
/// Reductions stay sequential elsewhere to keep summation order fixed.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace curlcurl
