///////////////////////////////////////////////////////////////////////////////
// parallel.hpp
//
// block-parallel map/reduce with a deterministic combine order: work is split
// into a fixed number of blocks independent of the worker count, each block is
// processed serially, and block results are combined in block order, so the
// result is bit-identical for any QD_THREADS setting.
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace qd {

/// worker count: min(hardware, QD_THREADS if set)
int worker_count();

/// runs fn(block_index, begin, end) over [0,n) split into n_blocks ranges
void parallel_blocks(std::size_t n, int n_blocks,
                     const std::function<void(int, std::size_t, std::size_t)>& fn);

/// deterministic sum of fn(i) over i in [0,n)
template <class T, class F>
T parallel_sum(std::size_t n, F&& fn, T zero = T{}) {
    const int n_blocks = 64;
    std::vector<T> partial(n_blocks, zero);
    parallel_blocks(n, n_blocks, [&](int b, std::size_t lo, std::size_t hi) {
        T acc = zero;
        for (std::size_t i = lo; i < hi; ++i) acc += fn(i);
        partial[b] = acc;
    });
    T total = zero;
    for (int b = 0; b < n_blocks; ++b) total += partial[b];
    return total;
}

} // namespace qd
