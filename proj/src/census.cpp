#include "frobprimes/census.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace frobprimes {

std::uint64_t count_semigroup_primes(const CoprimePair& pair,
                                     const SieveConfig& cfg)
{
    SemigroupView view(pair);
    std::uint64_t count = 0;
    stream_primes(view.frobenius(), [&](std::uint64_t p) {
        if (view.contains(static_cast<std::int64_t>(p)))
            ++count;
    }, cfg);
    return count;
}

std::uint64_t count_semigroup_primes(const SemigroupView& view,
                                     const PrimeTable& table)
{
    std::uint64_t count = 0;
    for (std::uint64_t p : table.in_range(0, view.frobenius()))
        if (view.contains(static_cast<std::int64_t>(p)))
            ++count;
    return count;
}

std::uint64_t count_oracle(const CoprimePair& pair,
                           const PrimalityTable& primality)
{
    std::uint64_t s = frobenius(pair);
    if (s > 10'000'000ull)
        raise(errc::limit_too_large,
              "count_oracle supports S <= 1e7, got S=" + std::to_string(s));

    std::vector<std::uint8_t> reachable(s + 1, 0);
    reachable[0] = 1;
    std::uint64_t a = pair.a(), b = pair.b();
    for (std::uint64_t n = 0; n <= s; ++n) {
        if (!reachable[n])
            continue;
        if (n + a <= s)
            reachable[n + a] = 1;
        if (n + b <= s)
            reachable[n + b] = 1;
    }

    std::uint64_t count = 0;
    for (std::uint64_t n = 2; n <= s; ++n)
        if (reachable[n] && primality.is_prime(n))
            ++count;
    return count;
}

std::uint64_t count_oracle(const CoprimePair& pair)
{
    std::uint64_t s = frobenius(pair);
    if (s > 10'000'000ull)
        raise(errc::limit_too_large,
              "count_oracle supports S <= 1e7, got S=" + std::to_string(s));
    return count_oracle(pair, PrimalityTable::build(s));
}

namespace {

CountResult assemble(std::uint64_t a, std::uint64_t b, std::uint64_t s,
                     std::uint64_t pi_ab, std::uint64_t pi_s)
{
    if (s < 2)
        raise(errc::degenerate_s,
              "S=" + std::to_string(s) + " has pi(S)=0; ratio undefined");
    CountResult r;
    r.a = a;
    r.b = b;
    r.s = s;
    r.pi_ab = pi_ab;
    r.pi_s = pi_s;
    r.ratio = static_cast<double>(pi_ab) / static_cast<double>(pi_s);
    return r;
}

} // namespace

CountResult ratio_result(const CoprimePair& pair, const SieveConfig& cfg)
{
    SemigroupView view(pair);
    std::uint64_t s = view.frobenius();
    if (s < 2)
        raise(errc::degenerate_s,
              "S=" + std::to_string(s) + " has pi(S)=0; ratio undefined");
    std::uint64_t pi_ab = 0, pi_s = 0;
    stream_primes(s, [&](std::uint64_t p) {
        ++pi_s;
        if (view.contains(static_cast<std::int64_t>(p)))
            ++pi_ab;
    }, cfg);
    return assemble(pair.a(), pair.b(), s, pi_ab, pi_s);
}

CountResult ratio_result(const SemigroupView& view, const PrimeTable& table)
{
    std::uint64_t s = view.frobenius();
    std::uint64_t pi_ab = count_semigroup_primes(view, table);
    return assemble(view.a(), view.b(), s, pi_ab, table.count_leq(s));
}

namespace {

bool above_window_cutoff(std::uint64_t p, std::uint64_t num, std::uint64_t den,
                         std::uint64_t s)
{
    return static_cast<unsigned __int128>(p) * den >
           static_cast<unsigned __int128>(num) * s;
}

} // namespace

std::uint64_t gap_prime_count(const CoprimePair& pair, std::uint64_t num,
                              std::uint64_t den, const SieveConfig& cfg)
{
    if (num == 0 || num >= den)
        raise(errc::bad_argument, "window fraction must lie in (0,1)");
    SemigroupView view(pair);
    std::uint64_t s = view.frobenius();
    std::uint64_t count = 0;
    stream_primes(s, [&](std::uint64_t p) {
        if (above_window_cutoff(p, num, den, s) &&
            !view.contains(static_cast<std::int64_t>(p)))
            ++count;
    }, cfg);
    return count;
}

std::uint64_t gap_prime_count(const SemigroupView& view, const PrimeTable& table,
                              std::uint64_t num, std::uint64_t den)
{
    if (num == 0 || num >= den)
        raise(errc::bad_argument, "window fraction must lie in (0,1)");
    std::uint64_t s = view.frobenius();
    std::uint64_t low = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(num) * s / den); // cutoff: p*den > num*s
    std::uint64_t count = 0;
    for (std::uint64_t p : table.in_range(low, s))
        if (above_window_cutoff(p, num, den, s) &&
            !view.contains(static_cast<std::int64_t>(p)))
            ++count;
    return count;
}

std::uint64_t count_box_primes(const CoprimePair& pair, std::uint64_t x_max,
                               std::uint64_t y_max, std::uint64_t limit,
                               bool strict, const PrimalityTable& primality)
{
    std::uint64_t a = pair.a(), b = pair.b();
    std::uint64_t bound = limit;
    if (strict) {
        if (bound == 0)
            return 0;
        --bound; // values must satisfy ax+by <= bound
    }

    std::vector<std::uint64_t> prime_values;
    for (std::uint64_t x = 0; x <= x_max; ++x) {
        if (x > bound / a)
            break;
        std::uint64_t base = a * x;
        std::uint64_t y_count = (bound - base) / b; // largest admissible y
        if (y_max != kUnboundedY)
            y_count = std::min(y_count, y_max);
        std::uint64_t v = base;
        for (std::uint64_t y = 0;; ++y) {
            if (primality.is_prime(v))
                prime_values.push_back(v);
            if (y == y_count)
                break;
            v += b;
        }
    }
    std::sort(prime_values.begin(), prime_values.end());
    prime_values.erase(std::unique(prime_values.begin(), prime_values.end()),
                       prime_values.end());
    return prime_values.size();
}

std::uint64_t count_box_primes(const CoprimePair& pair, std::uint64_t x_max,
                               std::uint64_t y_max, std::uint64_t limit,
                               bool strict)
{
    return count_box_primes(pair, x_max, y_max, limit, strict,
                            PrimalityTable::build(limit));
}

} // namespace frobprimes

