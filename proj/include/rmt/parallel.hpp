#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace rmt {

/// Worker count: RMT_LAB_THREADS if set, otherwise hardware concurrency.
inline int worker_count() {
    if (const char* env = std::getenv("RMT_LAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

/// Run body(i) for i in [0, n). Each index does self-contained work (its own
/// RNG stream, its own output slot), so scheduling cannot affect results.
inline void parallel_for(int n, const std::function<void(int)>& body) {
    int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace rmt
