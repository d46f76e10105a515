#pragma once

#include <cstddef>
#include <functional>

namespace rieszlab {

/// Number of workers: hardware concurrency, capped by RIESZ_LAB_WORKERS.
int worker_count();

/// Run fn(block) for block in [0, n_blocks). Blocks are fixed units of work;
/// callers combine per-block results in block order, so results do not depend
/// on the worker count. Executes inline when only one worker is available or
/// the block count is small.
void parallel_blocks(std::size_t n_blocks, const std::function<void(std::size_t)>& fn);

}  // namespace rieszlab
