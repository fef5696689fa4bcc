#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ymh {

int default_workers();

// Runs f(k) for k in order[0..], handing out jobs in that order. The first
// exception (by job position) is rethrown after all workers stop.
template <class F>
void run_jobs(const std::vector<std::size_t>& order, int workers, F&& f) {
    const std::size_t count = order.size();
    workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto body = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < count;) {
            try {
                f(order[k]);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace ymh
