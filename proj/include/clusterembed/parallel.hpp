#pragma once

#include <cstdint>
#include <functional>

namespace clusterembed {

/// Runs fn(begin, end) over fixed-size chunks of [0, n), distributing chunks
/// across worker threads. Chunk boundaries do not depend on the thread count,
/// so per-chunk outputs are stable across runs and machines.
void parallel_for_chunks(std::int64_t n, std::int64_t chunk,
                         const std::function<void(std::int64_t, std::int64_t)>& fn);

/// Chunked parallel sum: term(i) accumulated per chunk, chunk partials reduced
/// in index order. Bitwise deterministic for a fixed chunk size.
double parallel_sum(std::int64_t n, std::int64_t chunk,
                    const std::function<double(std::int64_t)>& term);

} // namespace clusterembed
