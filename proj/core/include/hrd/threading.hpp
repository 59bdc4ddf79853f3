#pragma once

#include <functional>

namespace hrd {

// Runs fn(i) for i in [0, n). With threads > 1 each item executes entirely on
// one worker thread; the caller writes results into per-item slots and merges
// them in index order, so results are identical for any thread count.
void for_each_item(int n, int threads, const std::function<void(int)>& fn);

}  // namespace hrd
