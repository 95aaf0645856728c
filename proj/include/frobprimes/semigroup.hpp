#ifndef FROBPRIMES_SEMIGROUP_HPP
#define FROBPRIMES_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

#include "frobprimes/errors.hpp"

namespace frobprimes {

// A validated pair of coprime generators with 2 <= a < b and a*b <= 2^62.
// Everything derived from a validated pair fits in signed 64 bits, so
// downstream code never re-checks for overflow.
class CoprimePair {
public:
    std::uint64_t a() const { return a_; }
    std::uint64_t b() const { return b_; }

    friend CoprimePair make_pair(std::uint64_t a, std::uint64_t b);

private:
    CoprimePair(std::uint64_t a, std::uint64_t b) : a_(a), b_(b) {}

    std::uint64_t a_;
    std::uint64_t b_;
};

// Validation gate. Throws errc::not_coprime, errc::bad_order or
// errc::overflow.
CoprimePair make_pair(std::uint64_t a, std::uint64_t b);

// Largest integer not representable as ax+by with x,y >= 0: a*b - a - b.
std::uint64_t frobenius(const CoprimePair& pair);

// The numerical semigroup {ax+by : x,y >= 0} seen through its residue
// classes mod a. Within the class n == k*b (mod a), the smallest member is
// k*b, so membership is a single threshold comparison.
class SemigroupView {
public:
    explicit SemigroupView(const CoprimePair& pair);

    const CoprimePair& pair() const { return pair_; }
    std::uint64_t a() const { return pair_.a(); }
    std::uint64_t b() const { return pair_.b(); }
    std::uint64_t frobenius() const { return frobenius_; }
    std::uint64_t b_inverse() const { return b_inverse_; }

    // The unique k in [0, a-1] with n == k*b (mod a).
    std::uint64_t class_index(std::uint64_t n) const
    {
        return (n % pair_.a()) * b_inverse_ % pair_.a();
    }

    // Smallest semigroup element in class k, i.e. k*b.
    // Throws errc::index_out_of_range for k >= a.
    std::uint64_t class_min(std::uint64_t k) const;

    // True iff n = ax+by for some x,y >= 0. Negative n is in-domain and
    // yields false.
    bool contains(std::int64_t n) const
    {
        if (n < 0)
            return false;
        std::uint64_t u = static_cast<std::uint64_t>(n);
        return u >= class_index(u) * pair_.b();
    }

    // Elements x*a + k*b with 0 < x*a + k*b <= frobenius(), ascending.
    std::vector<std::uint64_t> enumerate_class(std::uint64_t k) const;

    // Number of integers in [0, S] outside the semigroup: (S+1)/2.
    std::uint64_t gap_count() const { return (frobenius_ + 1) / 2; }

private:
    CoprimePair pair_;
    std::uint64_t frobenius_;
    std::uint64_t b_inverse_;
};

} // namespace frobprimes

#endif
