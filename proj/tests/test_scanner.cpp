#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "frobprimes/scanner.hpp"
#include "frobprimes/util.hpp"
#include "oracles.hpp"

using namespace frobprimes;

namespace {

errc code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return errc::bad_argument;
}

} // namespace

TEST_CASE("tiny scan rectangle")
{
    std::vector<ScanRow> rows;
    ScanSummary s = scan(3, 3, 5, [&](const ScanRow& r) { rows.push_back(r); });

    REQUIRE(rows.size() == 2); // (3,4) and (3,5)
    CHECK(rows[0].a == 3);
    CHECK(rows[0].b == 4);
    CHECK(rows[0].pi_ab == 1);
    CHECK(rows[0].pi_s == 3);
    CHECK(rows[1].b == 5);
    CHECK(rows[1].pi_ab == 2);
    CHECK(rows[1].pi_s == 4);

    CHECK(s.pairs_scanned == 2);
    CHECK(s.min_ratio == doctest::Approx(1.0 / 3.0));
    CHECK(s.max_ratio == 0.5);
    CHECK(s.min_witnesses ==
          std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 4}});
    CHECK(s.max_witnesses ==
          std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 5}});
    CHECK(s.violations.empty());
}

TEST_CASE("empty scan rectangle")
{
    ScanSummary s = scan(3, 3, 3);
    CHECK(s.pairs_scanned == 0);
    CHECK(s.min_witnesses.empty());
    CHECK(s.max_witnesses.empty());
    CHECK(code_of([] { scan(2, 3, 10); }) == errc::bad_order);
    CHECK(code_of([] { scan(5, 4, 10); }) == errc::bad_order);
}

TEST_CASE("rows appear in lexicographic order and match census")
{
    std::vector<ScanRow> rows;
    scan(3, 12, 40, [&](const ScanRow& r) { rows.push_back(r); });
    REQUIRE(!rows.empty());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        bool ordered = rows[i - 1].a < rows[i].a ||
                       (rows[i - 1].a == rows[i].a && rows[i - 1].b < rows[i].b);
        REQUIRE(ordered);
    }
    for (const ScanRow& r : rows) {
        CoprimePair pair = make_pair(r.a, r.b);
        REQUIRE(r.s == frobenius(pair));
        REQUIRE(r.pi_ab == count_semigroup_primes(pair));
        REQUIRE(r.pi_ab == count_oracle(pair));
    }
}

TEST_CASE("scan output is independent of worker count")
{
    ScanOptions one;
    one.workers = 1;
    ScanOptions four;
    four.workers = 4;

    std::string stream1, stream4;
    ScanSummary s1 = scan(3, 25, 120,
                          [&](const ScanRow& r) { stream1 += to_csv_row(r) + '\n'; },
                          one);
    ScanSummary s4 = scan(3, 25, 120,
                          [&](const ScanRow& r) { stream4 += to_csv_row(r) + '\n'; },
                          four);
    CHECK(stream1 == stream4);
    CHECK(s1 == s4);
}

TEST_CASE("summary is consistent with the emitted rows")
{
    std::vector<ScanRow> rows;
    ScanSummary s = scan(3, 20, 100, [&](const ScanRow& r) { rows.push_back(r); });

    REQUIRE(s.pairs_scanned == rows.size());
    double min_ratio = 2.0, max_ratio = -1.0;
    for (const ScanRow& r : rows) {
        min_ratio = std::min(min_ratio, r.ratio);
        max_ratio = std::max(max_ratio, r.ratio);
    }
    CHECK(s.min_ratio == doctest::Approx(min_ratio).epsilon(1e-12));
    CHECK(s.max_ratio == doctest::Approx(max_ratio).epsilon(1e-12));
    for (auto [a, b] : s.min_witnesses) {
        CountResult r = ratio_result(make_pair(a, b));
        CHECK(static_cast<double>(r.pi_ab) / static_cast<double>(r.pi_s) ==
              doctest::Approx(s.min_ratio).epsilon(1e-12));
    }
}

TEST_CASE("ratio ties keep every witness in lexicographic order")
{
    // (3,4) gives 1/3 and (3,8) gives 2/6: an exact tie
    CountResult r34 = ratio_result(make_pair(3, 4));
    CountResult r38 = ratio_result(make_pair(3, 8));
    REQUIRE(r34.pi_ab * r38.pi_s == r38.pi_ab * r34.pi_s);

    ScanSummary s = scan(3, 3, 8); // ratios: 1/3, 1/2, 2/5, 1/3
    CHECK(s.min_witnesses ==
          std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 4}, {3, 8}});
    CHECK(std::is_sorted(s.min_witnesses.begin(), s.min_witnesses.end()));
}

TEST_CASE("trend rows")
{
    std::vector<std::uint64_t> bs{5, 7, 11};
    auto rows = trend(4, bs);
    REQUIRE(rows.size() == 3);
    for (const TrendRow& r : rows)
        CHECK(r.predicted == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(rows[0].b == 5);
    CHECK(rows[0].ratio ==
          doctest::Approx(ratio_result(make_pair(4, 5)).ratio).epsilon(1e-15));

    std::vector<std::uint64_t> bad{6};
    CHECK(code_of([&] { trend(3, bad); }) == errc::not_coprime);
    std::vector<std::uint64_t> bad2{2};
    CHECK(code_of([&] { trend(3, bad2); }) == errc::bad_order);
    CHECK(code_of([&] { trend(2, bs); }) == errc::bad_order);
}

TEST_CASE("classwise count identity")
{
    CHECK(classwise_count_identity(make_pair(3, 5)));
    CHECK(classwise_count_identity(make_pair(4, 7)));
    CHECK(classwise_count_identity(make_pair(3, 166)));

    PrimeTable table = PrimeTable::build(10000);
    for (auto [a, b] : oracles::all_pairs_with_s_up_to(10000, 3)) {
        SemigroupView view(make_pair(a, b));
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(classwise_count_identity(view, table));
    }
}

TEST_CASE("row and summary serialization")
{
    ScanRow row{3, 166, 329, 13, 66, 13.0 / 66.0};
    CHECK(to_csv_row(row) == "3,166,329,13,66,0.196969696970");
    CHECK(to_json(row) ==
          "{\"a\":3,\"b\":166,\"s\":329,\"pi_ab\":13,\"pi_s\":66,"
          "\"ratio\":0.196969696970}");

    ScanSummary s = scan(3, 3, 5);
    std::string json = to_json(s);
    CHECK(json.find("\"pairs_scanned\":2") != std::string::npos);
    CHECK(json.find("\"min_witnesses\":[[3,4]]") != std::string::npos);
    CHECK(json.find("\"max_witnesses\":[[3,5]]") != std::string::npos);
    CHECK(json.find("\"violations\":[]") != std::string::npos);
    CHECK(json.find("\"a_min\":3") != std::string::npos);
}

TEST_CASE("mean deviation from 1/4 shrinks for a = 3 (reported trend)")
{
    // prefix counts of primes by residue class mod 3 give pi(3, b) in O(1):
    // pi(3,b) = 1 (the prime 3) + #{p == b (mod 3) : b <= p <= 2b-3}
    std::uint64_t limit = 2 * 200000;
    auto counts = oracles::prime_count_table(limit);

    std::vector<std::uint32_t> c1(limit + 1, 0), c2(limit + 1, 0);
    std::uint32_t r1 = 0, r2 = 0;
    for (std::uint64_t x = 2; x <= limit; ++x) {
        bool prime = counts[x] > counts[x - 1];
        if (prime && x % 3 == 1)
            ++r1;
        if (prime && x % 3 == 2)
            ++r2;
        c1[x] = r1;
        c2[x] = r2;
    }

    auto ratio_of = [&](std::uint64_t b) {
        std::uint64_t s = 2 * b - 3;
        const auto& c = (b % 3 == 1) ? c1 : c2;
        std::uint64_t pi_ab = 1 + c[s] - c[b - 1];
        return static_cast<double>(pi_ab) / static_cast<double>(counts[s]);
    };

    // cross-check the prefix route against the census route
    for (std::uint64_t b : {7ull, 100ull, 1001ull})
        CHECK(ratio_of(b) ==
              doctest::Approx(ratio_result(make_pair(3, b)).ratio).epsilon(1e-12));

    double prev_mean = 1.0;
    for (std::uint64_t scale : {1000ull, 10000ull, 100000ull}) {
        double sum = 0.0;
        std::uint64_t n = 0;
        for (std::uint64_t b = scale + 1; b <= 2 * scale; ++b) {
            if (b % 3 == 0)
                continue;
            sum += std::abs(ratio_of(b) - 0.25);
            ++n;
        }
        double mean = sum / static_cast<double>(n);
        CHECK(mean <= prev_mean);
        prev_mean = mean;
    }
}
