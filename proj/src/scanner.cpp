#include "frobprimes/scanner.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "frobprimes/util.hpp"

namespace frobprimes {

namespace {

using u128 = unsigned __int128;

// ratio comparison without floating point: pi_ab/pi_s vs num/den
int compare_ratio(std::uint64_t pi_ab, std::uint64_t pi_s, std::uint64_t num,
                  std::uint64_t den)
{
    u128 lhs = static_cast<u128>(pi_ab) * den;
    u128 rhs = static_cast<u128>(num) * pi_s;
    if (lhs < rhs)
        return -1;
    return lhs > rhs ? 1 : 0;
}

bool outside_conjectured_window(std::uint64_t pi_ab, std::uint64_t pi_s)
{
    // below 13/66 or above 1/2, exactly
    bool below = static_cast<u128>(13) * pi_s > static_cast<u128>(66) * pi_ab;
    bool above = static_cast<u128>(2) * pi_ab > static_cast<u128>(pi_s);
    return below || above;
}

} // namespace

ScanSummary scan(std::uint64_t a_min, std::uint64_t a_max, std::uint64_t b_max,
                 const std::function<void(const ScanRow&)>& row_sink,
                 const ScanOptions& opts)
{
    if (a_min < 3 || a_min > a_max)
        raise(errc::bad_order, "scan requires 3 <= a_min <= a_max");

    ScanSummary summary;
    summary.a_min = a_min;
    summary.a_max = a_max;
    summary.b_max = b_max;

    std::vector<CoprimePair> pairs;
    std::uint64_t max_s = 0;
    for (std::uint64_t a = a_min; a <= a_max; ++a) {
        for (std::uint64_t b = a + 1; b <= b_max; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            pairs.push_back(make_pair(a, b));
            max_s = std::max(max_s, a * b - a - b);
        }
    }
    if (pairs.empty())
        return summary;

    PrimeTable table = PrimeTable::build(max_s, opts.sieve);

    std::vector<ScanRow> rows(pairs.size());
    parallel_for_index(pairs.size(), opts.workers, [&](std::uint64_t i) {
        SemigroupView view(pairs[i]);
        CountResult r = ratio_result(view, table);
        rows[i] = ScanRow{r.a, r.b, r.s, r.pi_ab, r.pi_s, r.ratio};
    });

    // exact running extremes: numerator/denominator of the current min/max
    std::uint64_t min_num = 0, min_den = 0, max_num = 0, max_den = 0;
    for (const ScanRow& row : rows) {
        if (row_sink)
            row_sink(row);

        if (summary.pairs_scanned == 0) {
            min_num = max_num = row.pi_ab;
            min_den = max_den = row.pi_s;
            summary.min_witnesses = {{row.a, row.b}};
            summary.max_witnesses = {{row.a, row.b}};
        } else {
            int cmp_min = compare_ratio(row.pi_ab, row.pi_s, min_num, min_den);
            if (cmp_min < 0) {
                min_num = row.pi_ab;
                min_den = row.pi_s;
                summary.min_witnesses = {{row.a, row.b}};
            } else if (cmp_min == 0) {
                summary.min_witnesses.emplace_back(row.a, row.b);
            }
            int cmp_max = compare_ratio(row.pi_ab, row.pi_s, max_num, max_den);
            if (cmp_max > 0) {
                max_num = row.pi_ab;
                max_den = row.pi_s;
                summary.max_witnesses = {{row.a, row.b}};
            } else if (cmp_max == 0) {
                summary.max_witnesses.emplace_back(row.a, row.b);
            }
        }

        if (outside_conjectured_window(row.pi_ab, row.pi_s))
            summary.violations.emplace_back(row.a, row.b);

        ++summary.pairs_scanned;
    }

    summary.min_ratio = static_cast<double>(min_num) / static_cast<double>(min_den);
    summary.max_ratio = static_cast<double>(max_num) / static_cast<double>(max_den);
    return summary;
}

std::vector<TrendRow> trend(std::uint64_t a,
                            std::span<const std::uint64_t> b_values,
                            const ScanOptions& opts)
{
    if (a < 3)
        raise(errc::bad_order, "trend requires a >= 3");

    std::vector<CoprimePair> pairs;
    std::uint64_t max_s = 0;
    pairs.reserve(b_values.size());
    for (std::uint64_t b : b_values) {
        pairs.push_back(make_pair(a, b)); // validates order and coprimality
        max_s = std::max(max_s, a * b - a - b);
    }
    if (pairs.empty())
        return {};

    PrimeTable table = PrimeTable::build(max_s, opts.sieve);
    double predicted =
        0.5 - 0.5 / (static_cast<double>(a) - 1.0);

    std::vector<TrendRow> rows(pairs.size());
    parallel_for_index(pairs.size(), opts.workers, [&](std::uint64_t i) {
        SemigroupView view(pairs[i]);
        CountResult r = ratio_result(view, table);
        rows[i] = TrendRow{r.b, r.ratio, predicted};
    });
    return rows;
}

bool classwise_count_identity(const SemigroupView& view, const PrimeTable& table)
{
    std::uint64_t a = view.a(), b = view.b(), s = view.frobenius();
    std::uint64_t census = count_semigroup_primes(view, table);

    std::uint64_t sum = is_prime(a) ? 1 : 0;
    for (std::uint64_t p : table.in_range(b - 1, s)) {
        std::uint64_t k = view.class_index(p);
        if (k >= 1 && std::gcd(k, a) == 1 && p >= k * b)
            ++sum;
    }
    return sum == census;
}

bool classwise_count_identity(const CoprimePair& pair, const SieveConfig& cfg)
{
    std::uint64_t s = frobenius(pair);
    if (s > 10'000'000ull)
        raise(errc::limit_too_large,
              "classwise identity check supports S <= 1e7, got S=" +
                  std::to_string(s));
    SemigroupView view(pair);
    PrimeTable table = PrimeTable::build(s, cfg);
    return classwise_count_identity(view, table);
}

std::string to_csv_row(const ScanRow& row)
{
    return std::to_string(row.a) + ',' + std::to_string(row.b) + ',' +
           std::to_string(row.s) + ',' + std::to_string(row.pi_ab) + ',' +
           std::to_string(row.pi_s) + ',' + format_real(row.ratio);
}

std::string to_json(const ScanRow& row)
{
    return "{\"a\":" + std::to_string(row.a) + ",\"b\":" + std::to_string(row.b) +
           ",\"s\":" + std::to_string(row.s) +
           ",\"pi_ab\":" + std::to_string(row.pi_ab) +
           ",\"pi_s\":" + std::to_string(row.pi_s) +
           ",\"ratio\":" + format_real(row.ratio) + '}';
}

namespace {

std::string witness_list_json(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& list)
{
    std::string out = "[";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0)
            out += ',';
        out += "[" + std::to_string(list[i].first) + ',' +
               std::to_string(list[i].second) + ']';
    }
    out += ']';
    return out;
}

} // namespace

std::string to_json(const ScanSummary& s)
{
    std::string out = "{\"a_min\":" + std::to_string(s.a_min);
    out += ",\"a_max\":" + std::to_string(s.a_max);
    out += ",\"b_max\":" + std::to_string(s.b_max);
    out += ",\"pairs_scanned\":" + std::to_string(s.pairs_scanned);
    out += ",\"min_ratio\":" + format_real(s.min_ratio);
    out += ",\"max_ratio\":" + format_real(s.max_ratio);
    out += ",\"min_witnesses\":" + witness_list_json(s.min_witnesses);
    out += ",\"max_witnesses\":" + witness_list_json(s.max_witnesses);
    out += ",\"violations\":" + witness_list_json(s.violations);
    out += '}';
    return out;
}

} // namespace frobprimes
