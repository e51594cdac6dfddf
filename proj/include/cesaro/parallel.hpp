#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

#include "cesaro/quadrature.hpp"

namespace cesaro {

namespace detail {
inline std::atomic<int>& thread_setting() {
    static std::atomic<int> n{1};
    return n;
}
} // namespace detail

inline int max_threads() { return detail::thread_setting().load(); }

/// Worker count for block loops. Affects wall time only: block partition and
/// reduction order are fixed, so results are identical for every n.
inline void set_max_threads(int n) { detail::thread_setting().store(n < 1 ? 1 : n); }

/// Apply block_fn(begin,end) over a fixed partition of [0,n) into blocks of
/// the given size; partial results are combined strictly in block order.
inline double block_sum(std::size_t n, std::size_t block_size,
                        const std::function<double(std::size_t, std::size_t)>& block_fn) {
    if (n == 0) return 0.0;
    if (block_size == 0) block_size = 1;
    const std::size_t nblocks = (n + block_size - 1) / block_size;
    std::vector<double> partial(nblocks, 0.0);
    const int workers = std::min<std::size_t>(std::max(max_threads(), 1), nblocks);
    if (workers <= 1) {
        for (std::size_t b = 0; b < nblocks; ++b)
            partial[b] = block_fn(b * block_size, std::min(n, (b + 1) * block_size));
    } else {
        std::atomic<std::size_t> next{0};
        auto run = [&] {
            for (;;) {
                std::size_t b = next.fetch_add(1);
                if (b >= nblocks) return;
                partial[b] = block_fn(b * block_size, std::min(n, (b + 1) * block_size));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    return pairwise_sum(partial);
}

} // namespace cesaro
