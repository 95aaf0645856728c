#include "frobprimes/primes.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

namespace frobprimes {

namespace {

std::uint64_t isqrt(std::uint64_t n)
{
    if (n == 0)
        return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n)
        --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

// Odd primes <= max_value by a plain sieve; these seed the segmented sieve,
// so max_value stays around sqrt(ceiling) ~ 1e5.
std::vector<std::uint32_t> odd_base_primes(std::uint64_t max_value)
{
    std::vector<std::uint32_t> out;
    if (max_value < 3)
        return out;
    std::vector<bool> composite(max_value + 1, false);
    for (std::uint64_t i = 3; i <= max_value; i += 2) {
        if (composite[i])
            continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= max_value; j += 2 * i)
            composite[j] = true;
    }
    return out;
}

void check_ceiling(std::uint64_t limit, const SieveConfig& cfg)
{
    if (limit > cfg.ceiling)
        raise(errc::limit_too_large,
              "limit " + std::to_string(limit) + " exceeds sieve ceiling " +
                  std::to_string(cfg.ceiling) + " (raise it explicitly)");
}

// Walks segments of odd numbers covering [low_odd, limit]; for each segment
// calls fn(lo, hi, words, nbits) where bit i of words represents lo + 2*i
// and set bits are primes. low_odd must be odd and >= 3.
template <typename Fn>
void walk_odd_segments(std::uint64_t low_odd, std::uint64_t limit,
                       const SieveConfig& cfg, Fn&& fn)
{
    if (low_odd > limit)
        return;
    std::uint64_t seg_bits = std::max<std::uint64_t>(cfg.segment_length / 2, 64);
    std::vector<std::uint32_t> base = odd_base_primes(isqrt(limit));
    std::vector<std::uint64_t> words;

    for (std::uint64_t lo = low_odd; lo <= limit; lo += 2 * seg_bits) {
        std::uint64_t last_odd = (limit % 2 == 1) ? limit : limit - 1;
        std::uint64_t hi = std::min(lo + 2 * (seg_bits - 1), last_odd);
        std::uint64_t nbits = (hi - lo) / 2 + 1;
        std::uint64_t nwords = (nbits + 63) / 64;
        words.assign(nwords, ~0ull);
        if (nbits % 64 != 0)
            words[nwords - 1] = (1ull << (nbits % 64)) - 1;

        for (std::uint32_t p32 : base) {
            std::uint64_t p = p32;
            if (p * p > hi)
                break;
            std::uint64_t start = p * p;
            if (start < lo) {
                std::uint64_t q = (lo + p - 1) / p;
                if ((q & 1) == 0)
                    ++q;
                start = q * p;
            }
            for (std::uint64_t v = start; v <= hi; v += 2 * p)
                words[(v - lo) >> 7] &= ~(1ull << (((v - lo) >> 1) & 63));
        }

        fn(lo, hi, words, nbits);
    }
}

// Streaming prime counter answering sorted query points. `start_x` /
// `start_count` allow resuming: start_count must equal pi(start_x) and all
// points must exceed start_x. `record` receives (x, pi(x)) in input order.
template <typename Record>
void count_at_points(std::span<const std::uint64_t> points,
                     std::uint64_t start_x, std::uint64_t start_count,
                     const SieveConfig& cfg, Record&& record)
{
    if (points.empty())
        return;
    std::uint64_t limit = points.back();
    check_ceiling(limit, cfg);

    std::size_t idx = 0;
    std::uint64_t count = start_count;

    while (idx < points.size() && points[idx] < 2) {
        record(points[idx], count);
        ++idx;
    }
    if (start_x < 2 && limit >= 2)
        ++count; // the prime 2

    std::uint64_t low = std::max<std::uint64_t>(start_x + 1, 3);
    if (low % 2 == 0)
        ++low;

    walk_odd_segments(low, limit, cfg, [&](std::uint64_t lo, std::uint64_t hi,
                                           const std::vector<std::uint64_t>& words,
                                           std::uint64_t nbits) {
        while (idx < points.size() && points[idx] < lo) {
            record(points[idx], count);
            ++idx;
        }
        std::size_t wpos = 0;
        std::uint64_t counted = 0;
        while (idx < points.size() && points[idx] <= hi) {
            std::uint64_t tgt = (points[idx] - lo) >> 1;
            std::size_t wtgt = tgt >> 6;
            while (wpos < wtgt)
                counted += std::popcount(words[wpos++]);
            std::uint64_t keep = (tgt & 63) == 63
                                     ? ~0ull
                                     : (1ull << ((tgt & 63) + 1)) - 1;
            record(points[idx], count + counted + std::popcount(words[wtgt] & keep));
            ++idx;
        }
        std::size_t nwords = (nbits + 63) / 64;
        while (wpos < nwords)
            counted += std::popcount(words[wpos++]);
        count += counted;
    });

    while (idx < points.size()) {
        record(points[idx], count);
        ++idx;
    }
}

void require_strictly_ascending(std::span<const std::uint64_t> points)
{
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i] <= points[i - 1])
            raise(errc::not_sorted, "points must be strictly ascending");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

constexpr std::uint64_t kFirstPrimes[15] = {2,  3,  5,  7,  11, 13, 17, 19,
                                            23, 29, 31, 37, 41, 43, 47};

double li_integrand(double t) { return 1.0 / std::log(t); }

double simpson(double a, double b, double fa, double fm, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(double a, double m, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth)
{
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = li_integrand(lm);
    double frm = li_integrand(rm);
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

std::optional<std::uint64_t> CheckpointTable::lookup(std::uint64_t x) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                               [](const Entry& e, std::uint64_t v) { return e.x < v; });
    if (it != entries_.end() && it->x == x)
        return it->count;
    return std::nullopt;
}

void CheckpointTable::put(std::uint64_t x, std::uint64_t count)
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                               [](const Entry& e, std::uint64_t v) { return e.x < v; });
    if (it != entries_.end() && it->x == x) {
        assert(it->count == count);
        it->count = count;
        return;
    }
    entries_.insert(it, Entry{x, count});
}

CheckpointTable CheckpointTable::load_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        raise(errc::io_error, "cannot open checkpoint file " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "x,pi")
        raise(errc::io_error, "bad checkpoint header in " + path.string());
    CheckpointTable table;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::uint64_t x = 0, count = 0;
        if (std::sscanf(line.c_str(), "%llu,%llu",
                        reinterpret_cast<unsigned long long*>(&x),
                        reinterpret_cast<unsigned long long*>(&count)) != 2)
            raise(errc::io_error, "bad checkpoint row: " + line);
        if (!table.entries_.empty()) {
            const Entry& last = table.entries_.back();
            if (x <= last.x || count < last.count)
                raise(errc::io_error, "checkpoint rows out of order in " + path.string());
        }
        table.entries_.push_back(Entry{x, count});
    }
    return table;
}

void CheckpointTable::save_csv(const std::filesystem::path& path) const
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            raise(errc::io_error, "cannot write checkpoint file " + tmp.string());
        out << "x,pi\n";
        for (const Entry& e : entries_)
            out << e.x << ',' << e.count << '\n';
    }
    std::filesystem::rename(tmp, path);
}

void stream_primes(std::uint64_t limit,
                   const std::function<void(std::uint64_t)>& emit,
                   const SieveConfig& cfg)
{
    check_ceiling(limit, cfg);
    if (limit >= 2)
        emit(2);
    walk_odd_segments(3, limit, cfg, [&](std::uint64_t lo, std::uint64_t /*hi*/,
                                         const std::vector<std::uint64_t>& words,
                                         std::uint64_t nbits) {
        std::size_t nwords = (nbits + 63) / 64;
        for (std::size_t w = 0; w < nwords; ++w) {
            std::uint64_t bits = words[w];
            while (bits != 0) {
                unsigned tz = static_cast<unsigned>(std::countr_zero(bits));
                bits &= bits - 1;
                emit(lo + 2 * (64 * w + tz));
            }
        }
    });
}

std::uint64_t prime_count(std::uint64_t x, const SieveConfig& cfg)
{
    std::uint64_t result = 0;
    const std::uint64_t pts[1] = {x};
    count_at_points(pts, 0, 0, cfg,
                    [&](std::uint64_t, std::uint64_t c) { result = c; });
    return result;
}

CheckpointTable prime_count_at(std::span<const std::uint64_t> points,
                               const SieveConfig& cfg)
{
    require_strictly_ascending(points);
    CheckpointTable table;
    count_at_points(points, 0, 0, cfg, [&](std::uint64_t x, std::uint64_t c) {
        table.put(x, c);
    });
    return table;
}

CheckpointTable prime_count_at(std::span<const std::uint64_t> points,
                               const std::filesystem::path& cache_path,
                               const SieveConfig& cfg)
{
    require_strictly_ascending(points);
    CheckpointTable cache;
    if (std::filesystem::exists(cache_path))
        cache = CheckpointTable::load_csv(cache_path);

    std::vector<std::uint64_t> missing;
    for (std::uint64_t x : points)
        if (!cache.lookup(x))
            missing.push_back(x);

    if (!missing.empty()) {
        // Resume from the highest cached point below the first gap.
        std::uint64_t start_x = 0, start_count = 0;
        for (const auto& e : cache.entries()) {
            if (e.x <= missing.front() && e.x > start_x) {
                start_x = e.x;
                start_count = e.count;
            }
        }
        std::size_t since_save = 0;
        count_at_points(missing, start_x, start_count, cfg,
                        [&](std::uint64_t x, std::uint64_t c) {
                            cache.put(x, c);
                            if (++since_save >= 1024) {
                                cache.save_csv(cache_path);
                                since_save = 0;
                            }
                        });
        cache.save_csv(cache_path);
    }

    CheckpointTable result;
    for (std::uint64_t x : points)
        result.put(x, *cache.lookup(x));
    return result;
}

std::uint64_t prime_count_ap(std::uint64_t x, std::uint64_t m, std::int64_t l,
                             const SieveConfig& cfg)
{
    if (m < 1)
        raise(errc::bad_argument, "modulus must be >= 1");
    std::uint64_t residue = static_cast<std::uint64_t>(
        ((l % static_cast<std::int64_t>(m)) + static_cast<std::int64_t>(m)) %
        static_cast<std::int64_t>(m));
    std::uint64_t count = 0;
    stream_primes(x, [&](std::uint64_t p) {
        if (p % m == residue)
            ++count;
    }, cfg);
    return count;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull})
        if (n % p == 0)
            return n == p;

    std::uint64_t d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness_of_compositeness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness_of_compositeness = false;
                break;
            }
        }
        if (witness_of_compositeness)
            return false;
    }
    return true;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    if (n < 1)
        raise(errc::domain_error, "euler_phi requires n >= 1");
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t d = 2; static_cast<unsigned __int128>(d) * d <= m;
         d += (d == 2) ? 1 : 2) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0)
                m /= d;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

std::uint64_t omega(std::uint64_t n)
{
    if (n < 1)
        raise(errc::domain_error, "omega requires n >= 1");
    std::uint64_t count = 0;
    std::uint64_t m = n;
    for (std::uint64_t d = 2; static_cast<unsigned __int128>(d) * d <= m;
         d += (d == 2) ? 1 : 2) {
        if (m % d == 0) {
            ++count;
            while (m % d == 0)
                m /= d;
        }
    }
    if (m > 1)
        ++count;
    return count;
}

std::uint64_t primorial(std::uint64_t t)
{
    if (t < 1 || t > 15)
        raise(errc::index_out_of_range, "primorial defined for 1 <= t <= 15");
    std::uint64_t product = 1;
    for (std::uint64_t i = 0; i < t; ++i)
        product *= kFirstPrimes[i];
    return product;
}

double logarithmic_integral(double x)
{
    if (x < 2.0)
        raise(errc::domain_error, "logarithmic_integral requires x >= 2");
    if (x == 2.0)
        return 0.0;

    double a = 2.0, b = x;
    double fa = li_integrand(a), fb = li_integrand(b);
    double m = 0.5 * (a + b);
    double fm = li_integrand(m);
    double whole = simpson(a, b, fa, fm, fb);
    double tol = std::max(1e-12, std::abs(whole) * 1e-9);
    return adaptive_simpson(a, m, b, fa, fm, fb, whole, tol, 60);
}

PrimeTable PrimeTable::build(std::uint64_t limit, const SieveConfig& cfg)
{
    PrimeTable table;
    table.limit_ = limit;
    if (limit >= 3) {
        // pi(x) < 1.26 x / log x for x >= 17
        double est = 1.26 * static_cast<double>(limit) /
                     std::log(static_cast<double>(limit));
        table.primes_.reserve(static_cast<std::size_t>(est) + 16);
    }
    stream_primes(limit, [&](std::uint64_t p) { table.primes_.push_back(p); },
                  cfg);
    return table;
}

std::uint64_t PrimeTable::count_leq(std::uint64_t x) const
{
    assert(x <= limit_);
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<std::uint64_t>(it - primes_.begin());
}

std::span<const std::uint64_t> PrimeTable::in_range(std::uint64_t lo_exclusive,
                                                    std::uint64_t hi_inclusive) const
{
    assert(hi_inclusive <= limit_);
    auto first = std::upper_bound(primes_.begin(), primes_.end(), lo_exclusive);
    auto last = std::upper_bound(first, primes_.end(), hi_inclusive);
    return {primes_.data() + (first - primes_.begin()),
            primes_.data() + (last - primes_.begin())};
}

PrimalityTable PrimalityTable::build(std::uint64_t limit)
{
    PrimalityTable table;
    table.limit_ = limit;
    std::size_t nwords = static_cast<std::size_t>(limit / 64 + 1);
    table.bits_.assign(nwords, ~0ull);
    auto clear = [&](std::uint64_t n) {
        table.bits_[n >> 6] &= ~(1ull << (n & 63));
    };
    clear(0);
    if (limit >= 1)
        clear(1);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (!table.is_prime(i))
            continue;
        for (std::uint64_t j = i * i; j <= limit; j += i)
            clear(j);
    }
    return table;
}

} // namespace frobprimes
