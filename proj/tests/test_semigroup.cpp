#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "frobprimes/semigroup.hpp"
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

// smallest k with k*b == n (mod a), found by enumeration
std::uint64_t class_index_oracle(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    for (std::uint64_t k = 0; k < a; ++k)
        if ((k * b) % a == n % a)
            return k;
    FAIL("no class found");
    return 0;
}

} // namespace

TEST_CASE("make_pair validation")
{
    CHECK(make_pair(3, 5).a() == 3);
    CHECK(make_pair(3, 5).b() == 5);
    CHECK(make_pair(2, 7).a() == 2); // a = 2 is accepted

    CHECK(code_of([] { make_pair(4, 6); }) == errc::not_coprime);
    CHECK(code_of([] { make_pair(5, 3); }) == errc::bad_order);
    CHECK(code_of([] { make_pair(3, 3); }) == errc::bad_order);
    CHECK(code_of([] { make_pair(1, 5); }) == errc::bad_order);
    CHECK(code_of([] { make_pair(0, 5); }) == errc::bad_order);

    // a*b barely above/below 2^62
    std::uint64_t big = 1ull << 31;
    CHECK(code_of([&] { make_pair(big, big + 1); }) == errc::overflow);
    CHECK(make_pair(big - 1, big + 1).b() == big + 1); // (2^31-1)(2^31+1) = 2^62-1
}

TEST_CASE("frobenius number")
{
    CHECK(frobenius(make_pair(3, 5)) == 7);
    CHECK(frobenius(make_pair(2, 7)) == 5);
    CHECK(frobenius(make_pair(3, 166)) == 329);
}

TEST_CASE("class_index")
{
    SemigroupView v(make_pair(3, 5));
    CHECK(v.class_index(7) == 2);
    CHECK(v.class_index(8) == 1);
    CHECK(v.class_index(0) == 0);

    for (auto [a, b] : oracles::all_pairs_with_s_up_to(300)) {
        SemigroupView view(make_pair(a, b));
        for (std::uint64_t n = 0; n <= view.frobenius() + 3; ++n)
            CHECK(view.class_index(n) == class_index_oracle(a, b, n));
    }
}

TEST_CASE("class_min")
{
    SemigroupView v(make_pair(3, 5));
    CHECK(v.class_min(1) == 5);
    CHECK(v.class_min(0) == 0);
    CHECK(v.class_min(2) == 10); // exceeds S=7: the class is empty below S
    CHECK(code_of([&] { v.class_min(3); }) == errc::index_out_of_range);
}

TEST_CASE("contains")
{
    SemigroupView v(make_pair(3, 5));
    CHECK_FALSE(v.contains(7)); // the Frobenius number itself
    CHECK(v.contains(8));
    CHECK_FALSE(v.contains(4));
    CHECK_FALSE(v.contains(-1));
    CHECK_FALSE(v.contains(-100));
    CHECK(v.contains(0));
}

TEST_CASE("contains agrees with reachability oracle (exhaustive small)")
{
    for (auto [a, b] : oracles::all_pairs_with_s_up_to(10000)) {
        SemigroupView view(make_pair(a, b));
        std::uint64_t s = view.frobenius();
        std::uint64_t n_max = s + a + b;
        auto reach = oracles::reachability(a, b, n_max);
        std::uint64_t mismatches = 0;
        for (std::uint64_t n = 0; n <= n_max; ++n)
            mismatches +=
                view.contains(static_cast<std::int64_t>(n)) != (reach[n] == 1);
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(mismatches == 0);
    }
}

TEST_CASE("contains agrees with reachability oracle (sampled, S <= 1e5)")
{
    splitmix64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint64_t a, b;
        do {
            a = rng.in_range(2, 300);
            b = rng.in_range(a + 1, 100000 / a + 2);
        } while (std::gcd(a, b) != 1 || a * b - a - b > 100000);
        SemigroupView view(make_pair(a, b));
        std::uint64_t n_max = view.frobenius() + a + b;
        auto reach = oracles::reachability(a, b, n_max);
        std::uint64_t mismatches = 0;
        for (std::uint64_t n = 0; n <= n_max; ++n)
            mismatches +=
                view.contains(static_cast<std::int64_t>(n)) != (reach[n] == 1);
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(mismatches == 0);
    }
}

TEST_CASE("symmetry and completeness above S")
{
    for (auto [a, b] : oracles::all_pairs_with_s_up_to(10000)) {
        SemigroupView view(make_pair(a, b));
        std::uint64_t s = view.frobenius();
        std::uint64_t bad_symmetry = 0, bad_completeness = 0;
        for (std::uint64_t n = 0; n <= s; ++n) {
            bool in = view.contains(static_cast<std::int64_t>(n));
            bool mirrored = view.contains(static_cast<std::int64_t>(s - n));
            bad_symmetry += in == mirrored;
        }
        for (std::uint64_t n = s + 1; n <= s + a * b; ++n)
            bad_completeness += !view.contains(static_cast<std::int64_t>(n));
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(bad_symmetry == 0);
        REQUIRE(bad_completeness == 0);
    }
}

TEST_CASE("enumerate_class")
{
    SemigroupView v(make_pair(3, 5));
    CHECK(v.enumerate_class(0) == std::vector<std::uint64_t>{3, 6});
    CHECK(v.enumerate_class(1) == std::vector<std::uint64_t>{5});
    CHECK(v.enumerate_class(2).empty());
    CHECK(code_of([&] { v.enumerate_class(3); }) == errc::index_out_of_range);
}

TEST_CASE("classes partition the semigroup below S")
{
    for (auto [a, b] : oracles::all_pairs_with_s_up_to(2000)) {
        SemigroupView view(make_pair(a, b));
        std::uint64_t s = view.frobenius();
        std::set<std::uint64_t> seen;
        std::uint64_t total = 0;
        for (std::uint64_t k = 0; k < a; ++k) {
            auto members = view.enumerate_class(k);
            CHECK(std::is_sorted(members.begin(), members.end()));
            for (std::uint64_t m : members) {
                auto [it, inserted] = seen.insert(m);
                REQUIRE(inserted); // pairwise disjoint
            }
            total += members.size();
        }
        auto reach = oracles::reachability(a, b, s);
        std::uint64_t expected = 0;
        for (std::uint64_t n = 1; n <= s; ++n)
            if (reach[n]) {
                ++expected;
                REQUIRE(seen.count(n) == 1); // union covers T in [1, S]
            }
        REQUIRE(total == expected);
    }
}

TEST_CASE("gap_count")
{
    CHECK(SemigroupView(make_pair(3, 5)).gap_count() == 4);  // {1,2,4,7}
    CHECK(SemigroupView(make_pair(2, 3)).gap_count() == 1);  // {1}
    CHECK(SemigroupView(make_pair(3, 4)).gap_count() == 3);  // {1,2,5}

    for (auto [a, b] : oracles::all_pairs_with_s_up_to(10000)) {
        SemigroupView view(make_pair(a, b));
        std::uint64_t s = view.frobenius();
        auto reach = oracles::reachability(a, b, s);
        std::uint64_t gaps = 0;
        for (std::uint64_t n = 0; n <= s; ++n)
            if (!reach[n])
                ++gaps;
        REQUIRE(view.gap_count() == gaps);
    }
}

TEST_CASE("threshold rule characterizes membership")
{
    for (auto [a, b] : oracles::all_pairs_with_s_up_to(3000)) {
        SemigroupView view(make_pair(a, b));
        std::uint64_t mismatches = 0;
        for (std::uint64_t n = 0; n <= view.frobenius() + a + b; ++n) {
            bool threshold = view.class_min(view.class_index(n)) <= n;
            mismatches += threshold != view.contains(static_cast<std::int64_t>(n));
        }
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(mismatches == 0);
    }
}
