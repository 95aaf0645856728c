// Independent reference implementations used only by tests. Everything here
// deliberately avoids the library's algorithms: membership is dynamic
// programming reachability, primality is trial division, pi is a plain
// unsegmented sieve, Li is fixed-step Simpson.
#ifndef FROBPRIMES_TEST_ORACLES_HPP
#define FROBPRIMES_TEST_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracles {

// reachable[n] == 1 iff n = ax+by with x,y >= 0, for n in [0, n_max]
inline std::vector<std::uint8_t> reachability(std::uint64_t a, std::uint64_t b,
                                              std::uint64_t n_max)
{
    std::vector<std::uint8_t> reach(n_max + 1, 0);
    reach[0] = 1;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (!reach[n])
            continue;
        if (n + a <= n_max)
            reach[n + a] = 1;
        if (n + b <= n_max)
            reach[n + b] = 1;
    }
    return reach;
}

inline bool trial_division_is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// pi(x) for all x in [0, limit], by a plain full-array sieve
inline std::vector<std::uint32_t> prime_count_table(std::uint64_t limit)
{
    std::vector<std::uint8_t> is_prime(limit + 1, 1);
    is_prime[0] = 0;
    if (limit >= 1)
        is_prime[1] = 0;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (is_prime[i])
            for (std::uint64_t j = i * i; j <= limit; j += i)
                is_prime[j] = 0;
    std::vector<std::uint32_t> counts(limit + 1, 0);
    std::uint32_t running = 0;
    for (std::uint64_t x = 0; x <= limit; ++x) {
        running += is_prime[x];
        counts[x] = running;
    }
    return counts;
}

// composite Simpson with a fixed step count over [2, x]
inline double li_fixed_simpson(double x, std::uint64_t steps)
{
    if (steps % 2 == 1)
        ++steps;
    double h = (x - 2.0) / static_cast<double>(steps);
    auto f = [](double t) { return 1.0 / std::log(t); };
    double sum = f(2.0) + f(x);
    for (std::uint64_t i = 1; i < steps; ++i)
        sum += f(2.0 + h * static_cast<double>(i)) * ((i % 2 == 1) ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// all coprime pairs (a, b) with 2 <= a < b and frobenius number <= s_max,
// in lexicographic order
inline std::vector<std::pair<std::uint64_t, std::uint64_t>>
all_pairs_with_s_up_to(std::uint64_t s_max, std::uint64_t a_min = 2)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t a = a_min;; ++a) {
        if (a * (a + 1) - 2 * a - 1 > s_max)
            break;
        for (std::uint64_t b = a + 1; a * b - a - b <= s_max; ++b) {
            if (std::gcd(a, b) == 1)
                pairs.emplace_back(a, b);
        }
    }
    return pairs;
}

} // namespace oracles

#endif
