#ifndef FROBPRIMES_PRIMES_HPP
#define FROBPRIMES_PRIMES_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "frobprimes/errors.hpp"

namespace frobprimes {

// Knobs for the segmented sieve. `ceiling` guards against accidentally huge
// jobs; raise it explicitly for long runs.
struct SieveConfig {
    std::uint64_t segment_length = 1ull << 21; // integers per segment
    std::uint64_t ceiling = 10'000'000'000ull;
};

// Exact values of pi at a sorted list of points, computed in one sieve pass
// and optionally persisted as CSV (`x,pi` header) so long verifications can
// resume.
class CheckpointTable {
public:
    struct Entry {
        std::uint64_t x;
        std::uint64_t count;
    };

    CheckpointTable() = default;

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    std::optional<std::uint64_t> lookup(std::uint64_t x) const;

    // Inserts or overwrites the entry at x (values must stay consistent:
    // inserting a contradictory count is a caller bug).
    void put(std::uint64_t x, std::uint64_t count);

    static CheckpointTable load_csv(const std::filesystem::path& path);
    void save_csv(const std::filesystem::path& path) const;

private:
    std::vector<Entry> entries_; // strictly ascending in x
};

// Invokes `emit` once per prime <= limit, in ascending order.
// Throws errc::limit_too_large if limit exceeds cfg.ceiling.
void stream_primes(std::uint64_t limit,
                   const std::function<void(std::uint64_t)>& emit,
                   const SieveConfig& cfg = {});

// Exact pi(x).
std::uint64_t prime_count(std::uint64_t x, const SieveConfig& cfg = {});

// Exact pi at every requested point, one sieve pass total. Points must be
// strictly ascending (errc::not_sorted otherwise).
CheckpointTable prime_count_at(std::span<const std::uint64_t> points,
                               const SieveConfig& cfg = {});

// Same, but consults and updates a CSV cache file. Cached points are not
// recomputed; the sieve resumes from the highest cached point below the
// first missing one, and progress is flushed periodically so an interrupted
// run loses little work.
CheckpointTable prime_count_at(std::span<const std::uint64_t> points,
                               const std::filesystem::path& cache_path,
                               const SieveConfig& cfg = {});

// Number of primes p <= x with p == l (mod m); m >= 1, l any integer.
std::uint64_t prime_count_ap(std::uint64_t x, std::uint64_t m, std::int64_t l,
                             const SieveConfig& cfg = {});

// Deterministic Miller-Rabin. The 12-witness set {2,3,...,37} is exhaustive
// below 2^64, so this is exact for the full input range.
bool is_prime(std::uint64_t n);

// Euler totient by trial-division factorization; n >= 1.
std::uint64_t euler_phi(std::uint64_t n);

// Number of distinct prime divisors; n >= 1.
std::uint64_t omega(std::uint64_t n);

// Product of the first t primes, 1 <= t <= 15 (larger would overflow).
std::uint64_t primorial(std::uint64_t t);

// Integral of 1/log(t) from 2 to x, adaptive Simpson, relative error 1e-9.
// Throws errc::domain_error for x < 2.
double logarithmic_integral(double x);

// All primes <= limit, materialized for repeated range queries. Shared and
// immutable: scans over many pairs reuse one table.
class PrimeTable {
public:
    static PrimeTable build(std::uint64_t limit, const SieveConfig& cfg = {});

    std::uint64_t limit() const { return limit_; }
    std::span<const std::uint64_t> all() const { return primes_; }

    // pi(x) for x <= limit.
    std::uint64_t count_leq(std::uint64_t x) const;

    // Primes p with lo < p <= hi (hi <= limit).
    std::span<const std::uint64_t> in_range(std::uint64_t lo_exclusive,
                                            std::uint64_t hi_inclusive) const;

private:
    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
};

// Primality bitmap over [0, limit] for bulk membership tests on small
// values (box enumerations, oracles).
class PrimalityTable {
public:
    static PrimalityTable build(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    bool is_prime(std::uint64_t n) const
    {
        return n <= limit_ && bits_[n >> 6] >> (n & 63) & 1;
    }

private:
    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace frobprimes

#endif
