#include "frobprimes/semigroup.hpp"

#include <cassert>
#include <numeric>
#include <string>
#include <utility>

namespace frobprimes {

namespace {

// Multiplicative inverse of b modulo a via the extended Euclid recurrence.
// Requires gcd(a, b) = 1 and a >= 2.
std::uint64_t inverse_mod(std::uint64_t b, std::uint64_t a)
{
    std::int64_t t_prev = 0, t = 1;
    std::int64_t r_prev = static_cast<std::int64_t>(a);
    std::int64_t r = static_cast<std::int64_t>(b % a);
    while (r != 0) {
        std::int64_t q = r_prev / r;
        std::int64_t t_next = t_prev - q * t;
        t_prev = t;
        t = t_next;
        r_prev = std::exchange(r, r_prev - q * r);
    }
    assert(r_prev == 1);
    std::int64_t inv = t_prev % static_cast<std::int64_t>(a);
    if (inv < 0)
        inv += static_cast<std::int64_t>(a);
    return static_cast<std::uint64_t>(inv);
}

} // namespace

CoprimePair make_pair(std::uint64_t a, std::uint64_t b)
{
    if (a < 2 || a >= b)
        raise(errc::bad_order, "require 2 <= a < b, got a=" + std::to_string(a) +
                                   " b=" + std::to_string(b));
    if (std::gcd(a, b) != 1)
        raise(errc::not_coprime, "gcd(" + std::to_string(a) + ", " +
                                     std::to_string(b) + ") != 1");
    constexpr std::uint64_t kMaxProduct = 1ull << 62;
    if (b > kMaxProduct / a)
        raise(errc::overflow, "a*b exceeds 2^62");
    return CoprimePair(a, b);
}

std::uint64_t frobenius(const CoprimePair& pair)
{
    return pair.a() * pair.b() - pair.a() - pair.b();
}

SemigroupView::SemigroupView(const CoprimePair& pair)
    : pair_(pair),
      frobenius_(frobprimes::frobenius(pair)),
      b_inverse_(inverse_mod(pair.b(), pair.a()))
{
    // (a-1)(b-1) = S+1 with exactly one of a-1, b-1 even, so S is odd.
    assert(frobenius_ % 2 == 1);
    assert(pair_.b() % pair_.a() * b_inverse_ % pair_.a() == 1);
}

std::uint64_t SemigroupView::class_min(std::uint64_t k) const
{
    if (k >= pair_.a())
        raise(errc::index_out_of_range,
              "class index " + std::to_string(k) + " >= a");
    return k * pair_.b();
}

std::vector<std::uint64_t> SemigroupView::enumerate_class(std::uint64_t k) const
{
    std::uint64_t start = class_min(k);
    std::vector<std::uint64_t> out;
    if (start == 0)
        start = pair_.a(); // class 0 excludes 0 itself; its first element is a
    for (std::uint64_t v = start; v <= frobenius_; v += pair_.a())
        out.push_back(v);
    return out;
}

} // namespace frobprimes
