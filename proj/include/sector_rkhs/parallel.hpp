#ifndef SECTOR_RKHS_PARALLEL_HPP
#define SECTOR_RKHS_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace sector_rkhs::util {

/// Worker count: hardware concurrency capped by SECTOR_RKHS_THREADS.
int max_threads();

/// Runs fn(i) for i in [0,n). Work is partitioned by index, results must be
/// written by index; the partition does not depend on the worker count, so
/// any fixed-order reduction over the output is bit-reproducible.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace sector_rkhs::util

#endif  // SECTOR_RKHS_PARALLEL_HPP
