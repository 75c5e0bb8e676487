#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cuniform {

namespace detail {

// Calls body(i) for every i in [0, count) from up to `workers` threads.
// Indices are handed out dynamically; the first exception is rethrown.
inline void parallel_for(std::size_t count, unsigned workers,
                         const std::function<void(std::size_t)>& body) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n = std::min<std::size_t>(workers, count);
    pool.reserve(n);
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace detail

template <typename Job>
void for_each_table(const FunctionTable& f, TableKind kind,
                    const std::vector<Element>& multipliers, unsigned workers, Job&& job) {
    detail::parallel_for(multipliers.size(), workers, [&](std::size_t i) {
        const Element c = multipliers[i];
        const UniformityTable table = kind == TableKind::Ddt ? c_ddt(f, c) : c_bct(f, c);
        job(i, table);
    });
}

}  // namespace cuniform
