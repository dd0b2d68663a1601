#pragma once
#include <cstddef>
#include <functional>

namespace hrg {

// worker cap: HRG_THREADS clamped to [1, hardware_concurrency]
int worker_count();

// Runs fn(block_index) for block_index in [0, n_blocks). Blocks are a fixed
// decomposition of the work, so results must be written to per-block storage;
// which thread runs a block never affects the output.
void parallel_blocks(std::size_t n_blocks, const std::function<void(std::size_t)>& fn);

// convenience: index range [0, n) in contiguous chunks, fn(begin, end)
void parallel_ranges(std::size_t n, std::size_t min_chunk,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace hrg
