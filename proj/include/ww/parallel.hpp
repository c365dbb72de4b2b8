#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace ww::detail {

inline unsigned worker_count() {
    if (const char* env = std::getenv("WATERWORLD_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(i) for i in [0, n); each slot collects its own result so the merge
// order is independent of scheduling.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(size_t n, Fn fn) {
    std::vector<Result> results(n);
    unsigned workers = worker_count();
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers && w < n; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                results[i] = fn(i);
        });
    for (auto& t : pool) t.join();
    return results;
}

} // namespace ww::detail
