#include "frobprimes/util.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace frobprimes {

int resolve_workers(int requested)
{
    if (requested > 0)
        return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for_index(std::uint64_t n, int workers,
                        const std::function<void(std::uint64_t)>& fn)
{
    if (n == 0)
        return;

    int nthreads = resolve_workers(workers);
    if (static_cast<std::uint64_t>(nthreads) > n)
        nthreads = static_cast<int>(n);

    if (nthreads <= 1) {
        for (std::uint64_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    // Dynamic chunked scheduling: balances uneven per-index cost without
    // letting every index pay an atomic operation.
    std::uint64_t chunk = n / (static_cast<std::uint64_t>(nthreads) * 16);
    if (chunk == 0)
        chunk = 1;

    std::atomic<std::uint64_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            std::uint64_t begin = cursor.fetch_add(chunk);
            if (begin >= n)
                return;
            std::uint64_t end = std::min(begin + chunk, n);
            try {
                for (std::uint64_t i = begin; i < end; ++i)
                    fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t)
        threads.emplace_back(worker);
    for (auto& t : threads)
        t.join();

    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace frobprimes
