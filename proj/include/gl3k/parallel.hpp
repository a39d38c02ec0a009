#pragma once

#include <thread>
#include <atomic>
#include <vector>
#include <cstdlib>
#include <functional>

namespace gl3k {

inline int worker_count() {
    if (const char* env = std::getenv("GL3K_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

// Index-parallel loop; results must be written to caller-owned slots so the
// reduction order stays deterministic.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
    int nw = worker_count();
    if (nw <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nw - 1; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

} // namespace gl3k
