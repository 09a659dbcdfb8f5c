#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace nlsist {

// Worker count: explicit request wins, then NLS_THREADS, then the hardware.
inline int resolve_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NLS_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// Static-free parallel map over [0, n): each call spins up its workers and
// joins before returning; result aggregation is the caller's, by index.
template <class F>
void parallel_for(std::int64_t n, int threads, F body) {
    threads = std::min<std::int64_t>(std::max(threads, 1), n);
    if (threads <= 1) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(threads));
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (std::int64_t i; (i = next.fetch_add(1)) < n;) body(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace nlsist
