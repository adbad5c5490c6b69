#pragma once

#include <cstddef>
#include <functional>

namespace eisenspec {

/// Worker count: EISENSPEC_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Runs body(i) for i in [0, n). Indices are split into contiguous blocks,
/// one per worker; callers write into slot i so results never depend on
/// completion order. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace eisenspec
