#pragma once

#include <cstddef>
#include <functional>

namespace nliouville {

/// Worker-pool size: the NLIOUVILLE_WORKERS environment variable when set
/// (values < 1 mean serial), otherwise the hardware concurrency.
int worker_count();

/// Runs body(0..count-1) on the worker pool. Results must be written to
/// index-addressed slots so the output stays deterministic regardless of
/// scheduling. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace nliouville
