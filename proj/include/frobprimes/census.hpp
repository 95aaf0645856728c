#ifndef FROBPRIMES_CENSUS_HPP
#define FROBPRIMES_CENSUS_HPP

#include <cstdint>

#include "frobprimes/primes.hpp"
#include "frobprimes/semigroup.hpp"

namespace frobprimes {

// Counts for one pair: pi_ab = primes <= s inside the semigroup, pi_s =
// all primes <= s, ratio = pi_ab / pi_s.
struct CountResult {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t s = 0;
    std::uint64_t pi_ab = 0;
    std::uint64_t pi_s = 0;
    double ratio = 0.0;
};

// Number of primes p <= frobenius(pair) representable as ax+by. Streams a
// fresh sieve pass; the PrimeTable overload reuses a shared table (which
// must cover the Frobenius number).
std::uint64_t count_semigroup_primes(const CoprimePair& pair,
                                     const SieveConfig& cfg = {});
std::uint64_t count_semigroup_primes(const SemigroupView& view,
                                     const PrimeTable& table);

// Brute-force oracle for the same count: reachability array over [0, S]
// closed under +a/+b, intersected with a plain primality sieve. No residue
// thresholds anywhere. Requires S <= 10^7. The PrimalityTable overload is
// the bulk form (one shared sieve, must cover S).
std::uint64_t count_oracle(const CoprimePair& pair);
std::uint64_t count_oracle(const CoprimePair& pair,
                           const PrimalityTable& primality);

// Full CountResult. Throws errc::degenerate_s when S < 2 (pi_s would be 0).
CountResult ratio_result(const CoprimePair& pair, const SieveConfig& cfg = {});
CountResult ratio_result(const SemigroupView& view, const PrimeTable& table);

// Primes p with (num/den)*S < p <= S that are NOT in the semigroup. The
// lower cutoff is evaluated as p*den > num*S in exact integers.
std::uint64_t gap_prime_count(const CoprimePair& pair,
                              std::uint64_t window_numerator = 7,
                              std::uint64_t window_denominator = 8,
                              const SieveConfig& cfg = {});
std::uint64_t gap_prime_count(const SemigroupView& view, const PrimeTable& table,
                              std::uint64_t window_numerator = 7,
                              std::uint64_t window_denominator = 8);

// y_max value meaning "no bound on y" (the value limit bounds it instead).
inline constexpr std::uint64_t kUnboundedY = ~0ull;

// Number of DISTINCT primes expressible as ax+by with 0 <= x <= x_max,
// 0 <= y <= y_max and ax+by <= limit (strictly < limit when strict).
// The PrimalityTable overload shares one sieve across many pairs and must
// cover `limit`.
std::uint64_t count_box_primes(const CoprimePair& pair, std::uint64_t x_max,
                               std::uint64_t y_max, std::uint64_t limit,
                               bool strict);
std::uint64_t count_box_primes(const CoprimePair& pair, std::uint64_t x_max,
                               std::uint64_t y_max, std::uint64_t limit,
                               bool strict, const PrimalityTable& primality);

} // namespace frobprimes

#endif
