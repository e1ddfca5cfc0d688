#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cauchon::detail {

// Runs body(worker, index) for every index in [0, count), pulling indices
// from a shared counter. The first exception thrown by any worker is
// rethrown after all workers have joined.
template <class Body>
void parallel_for(std::uint64_t count, unsigned jobs, Body&& body) {
    jobs = std::max(1U, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::uint64_t k = 0; k < count; ++k)
            body(0U, k);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                try {
                    for (std::uint64_t k; (k = next.fetch_add(1)) < count;)
                        body(w, k);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next = count;
                }
            });
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace cauchon::detail
