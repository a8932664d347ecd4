#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

#include "kring/error.hpp"

namespace kring {

/// Deterministic fork-join map: fn(i) for i in [0, n), results written into
/// preallocated slots so the output order never depends on scheduling. With
/// workers == 1 everything runs inline. The first exception thrown by any
/// worker is rethrown after the pool joins.
template <typename T, typename Fn>
std::vector<T> parallel_map(size_t n, int workers, Fn fn) {
    if (workers < 1) throw InvalidInput("parallel_map: workers must be >= 1");
    std::vector<T> out(n);
    if (n == 0) return out;
    if (workers == 1) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    if (static_cast<size_t>(workers) > n) workers = static_cast<int>(n);
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                while (!failed.load(std::memory_order_relaxed)) {
                    size_t i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= n) break;
                    out[i] = fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}
