#pragma once

#include <cstddef>
#include <functional>

namespace nodal_hodge {

/// Worker count from NODAL_HODGE_THREADS; 0 or unset-and-single-core means
/// run inline. Unparsable values fall back to sequential.
unsigned worker_threads();

/// Calls fn(i) for i in [0, count). Each index runs exactly once; fn must be
/// safe to call concurrently for distinct indices. The first exception
/// thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace nodal_hodge
