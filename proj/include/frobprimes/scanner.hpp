#ifndef FROBPRIMES_SCANNER_HPP
#define FROBPRIMES_SCANNER_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobprimes/census.hpp"
#include "frobprimes/primes.hpp"
#include "frobprimes/semigroup.hpp"

namespace frobprimes {

struct ScanRow {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t s = 0;
    std::uint64_t pi_ab = 0;
    std::uint64_t pi_s = 0;
    double ratio = 0.0;

    bool operator==(const ScanRow&) const = default;
};

// Extremes and window violations over a scanned rectangle. Extreme-ratio
// comparisons are exact (integer cross products), so ties are detected
// reliably and every tying witness is kept, in lexicographic order. The
// scanned rectangle is recorded so a summary is meaningful on its own.
struct ScanSummary {
    std::uint64_t a_min = 0;
    std::uint64_t a_max = 0;
    std::uint64_t b_max = 0;
    std::uint64_t pairs_scanned = 0;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> min_witnesses;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> max_witnesses;
    // pairs whose ratio falls outside [13/66, 1/2], by exact comparison
    std::vector<std::pair<std::uint64_t, std::uint64_t>> violations;

    bool operator==(const ScanSummary&) const = default;
};

struct ScanOptions {
    SieveConfig sieve;
    int workers = 0; // 0 = auto
};

// Visits every coprime pair with a_min <= a <= a_max, a < b <= b_max, in
// lexicographic order; emits one row per pair to row_sink (if non-null) and
// returns the summary. Output is byte-identical regardless of worker count.
ScanSummary scan(std::uint64_t a_min, std::uint64_t a_max, std::uint64_t b_max,
                 const std::function<void(const ScanRow&)>& row_sink = nullptr,
                 const ScanOptions& opts = {});

struct TrendRow {
    std::uint64_t b = 0;
    double ratio = 0.0;
    double predicted = 0.0;
};

// Ratio against the limiting constant 1/2 - 1/(2(a-1)) for a fixed a and a
// list of admissible b values (ascending, each coprime to a and > a).
std::vector<TrendRow> trend(std::uint64_t a,
                            std::span<const std::uint64_t> b_values,
                            const ScanOptions& opts = {});

// Checks the exact class-by-class decomposition of the semigroup prime
// count: census count == [a prime] + sum over k in [1, a-1], gcd(k,a)=1 of
// #{p prime : p == k*b (mod a), k*b <= p <= S}. Requires S <= 1e7 for the
// self-contained overload.
bool classwise_count_identity(const CoprimePair& pair,
                              const SieveConfig& cfg = {});
bool classwise_count_identity(const SemigroupView& view,
                              const PrimeTable& table);

inline constexpr std::string_view kScanCsvHeader = "a,b,s,pi_ab,pi_s,ratio";

std::string to_csv_row(const ScanRow& row);
std::string to_json(const ScanRow& row);
std::string to_json(const ScanSummary& summary);

} // namespace frobprimes

#endif
