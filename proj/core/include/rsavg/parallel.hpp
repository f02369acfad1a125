#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rsavg {

/// Worker count used when the caller asks for 0.
unsigned default_jobs();

/// Applies f to every item on up to `jobs` threads. Results keep the input
/// order. The first exception thrown by f is rethrown after all workers stop.
template <class T, class F>
auto parallel_map(std::vector<T> const & items, unsigned jobs, F f) -> std::vector<decltype(f(items.front()))>
{
    using R = decltype(f(items.front()));
    std::vector<R> results(items.size());
    if (jobs == 0) jobs = default_jobs();
    if (jobs <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) results[i] = f(items[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t const i = next.fetch_add(1);
            if (i >= items.size()) return;
            try {
                results[i] = f(items[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = items.size();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned const n = static_cast<unsigned>(std::min<std::size_t>(jobs, items.size()));
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto & th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace rsavg
