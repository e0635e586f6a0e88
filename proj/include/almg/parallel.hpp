#pragma once

#include <cstddef>
#include <functional>

namespace almg {

/// Upper bound on worker threads used by checks and searches. Results never
/// depend on this value.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Splits [0, count) into contiguous chunks and calls body(chunk, begin, end)
/// for each, possibly concurrently. Returns the number of chunks. Nested
/// calls from inside a worker run inline as a single chunk.
std::size_t parallel_chunks(
    std::size_t count,
    const std::function<void(std::size_t chunk, std::size_t begin,
                             std::size_t end)>& body);

/// Number of chunks parallel_chunks would use for `count` items.
std::size_t chunk_count(std::size_t count);

}  // namespace almg
