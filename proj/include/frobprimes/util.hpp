#ifndef FROBPRIMES_UTIL_HPP
#define FROBPRIMES_UTIL_HPP

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>

namespace frobprimes {

// All real values leaving the library through text interfaces are printed
// with 12 significant digits, trailing zeros kept (so 13/66 prints as
// 0.196969696970 and 1/2 as 0.500000000000).
inline std::string format_real(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.12g", v);
    return buf;
}

class stopwatch {
public:
    stopwatch() : start_(clock::now()) {}

    std::uint64_t elapsed_ms() const
    {
        auto d = clock::now() - start_;
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_;
};

// Deterministic 64-bit mixing generator (splitmix64). Seeded sampling in the
// verifier goes through this so re-runs with the same seed reproduce the
// sample stream exactly.
struct splitmix64 {
    std::uint64_t state;

    explicit splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound); bound >= 1
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // uniform in [lo, hi] inclusive
    std::uint64_t in_range(std::uint64_t lo, std::uint64_t hi)
    {
        return lo + below(hi - lo + 1);
    }
};

// Resolve a worker-count setting (0 = auto).
int resolve_workers(int requested);

// Runs fn(i) for every i in [0, n). Work is distributed dynamically over
// `workers` threads; each index writes only to caller-owned slot i, so the
// result is independent of the worker count. Exceptions from fn are rethrown
// on the calling thread.
void parallel_for_index(std::uint64_t n, int workers,
                        const std::function<void(std::uint64_t)>& fn);

} // namespace frobprimes

#endif
