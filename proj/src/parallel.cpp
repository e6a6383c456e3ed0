#include "qd/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace qd {

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("QD_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

void parallel_blocks(std::size_t n, int n_blocks,
                     const std::function<void(int, std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    auto range = [&](int b) {
        std::size_t lo = n * static_cast<std::size_t>(b) / n_blocks;
        std::size_t hi = n * static_cast<std::size_t>(b + 1) / n_blocks;
        return std::pair<std::size_t, std::size_t>(lo, hi);
    };
    int workers = std::min(worker_count(), n_blocks);
    if (workers <= 1 || n < 256) {
        for (int b = 0; b < n_blocks; ++b) {
            auto [lo, hi] = range(b);
            if (lo < hi) fn(b, lo, hi);
        }
        return;
    }
    std::atomic<int> next{0};
    auto run = [&]() {
        for (;;) {
            int b = next.fetch_add(1);
            if (b >= n_blocks) break;
            auto [lo, hi] = range(b);
            if (lo < hi) fn(b, lo, hi);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

} // namespace qd
