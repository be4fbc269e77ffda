#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace innerfn {

// Worker count: INNERFN_THREADS when set (clamped to >= 1), else the
// hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, n) on contiguous index blocks.  Results must be
// written to disjoint slots; scheduling never affects output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Pairwise reduction in a fixed order, independent of the thread count.
double pairwise_sum(const std::vector<double>& v);

} // namespace innerfn
