#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace steerkit {

/// Worker count for partitionable loops: hardware concurrency capped by the
/// STEERKIT_THREADS environment variable, never below 1.
int worker_count();

/// Splits [0, total) into contiguous chunks, runs `body(begin, end, slot)`
/// on up to worker_count() threads, one result slot per chunk, in chunk
/// order. Callers merge the slots in order, which keeps reductions
/// deterministic regardless of the worker count.
void run_chunked(std::int64_t total, int chunks,
                 const std::function<void(std::int64_t, std::int64_t, int)>& body);

}  // namespace steerkit
