#ifndef SLICEGRA_PARALLEL_HH
#define SLICEGRA_PARALLEL_HH

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace slicegra
{
    /// Calls f(i) for i in [0, count) on up to `jobs` threads. Callers write
    /// results into per-index slots, so merged output is independent of `jobs`.
    /// The first exception thrown by any call is rethrown here.
    template <typename F>
    auto parallel_for(std::size_t count, unsigned jobs, F && f) -> void
    {
        jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
        if (jobs == 1) {
            for (std::size_t i = 0; i < count; ++i)
                f(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < jobs; ++t)
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        f(i);
                    }
                    catch (...) {
                        std::scoped_lock lock{failure_mutex};
                        if (! failure)
                            failure = std::current_exception();
                        next = count;
                    }
                }
            });
        workers.clear();
        if (failure)
            std::rethrow_exception(failure);
    }
}

#endif
