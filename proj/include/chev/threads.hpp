#pragma once
#include <cstddef>
#include <functional>

namespace chev {

// Worker cap: CHEV_THREADS environment variable; unset or 0 means one worker
// per hardware thread. Read on every call so a process can change it between
// runs.
int worker_count();

// Runs fn(0..n-1) across workers. fn must not throw and must only write to
// its own output slot; iteration order is unspecified, so callers are
// responsible for making results order-independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace chev
