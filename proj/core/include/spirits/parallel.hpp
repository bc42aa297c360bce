#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace spirits {

// Runs fn(i) for i in [0, n). Work items must be independent; results are
// written by index so the outcome does not depend on the thread count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int k = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), n));
    pool.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

} // namespace spirits
