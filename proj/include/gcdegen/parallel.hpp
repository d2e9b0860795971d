#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gcdegen {

/// Applies fn to every item on up to `jobs` threads. Results come back in input
/// order, so output is independent of scheduling. The first exception thrown by
/// any worker is rethrown.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, int jobs, Fn fn) -> std::vector<decltype(fn(items.front()))> {
    using R = decltype(fn(items.front()));
    std::vector<R> out(items.size());
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), items.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < items.size(); i = next++) {
                    try {
                        out[i] = fn(items[i]);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace gcdegen
