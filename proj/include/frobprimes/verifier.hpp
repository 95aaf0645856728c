#ifndef FROBPRIMES_VERIFIER_HPP
#define FROBPRIMES_VERIFIER_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "frobprimes/census.hpp"
#include "frobprimes/primes.hpp"
#include "frobprimes/report.hpp"
#include "frobprimes/semigroup.hpp"

namespace frobprimes {

struct VerifyOptions {
    SieveConfig sieve;
    int workers = 0; // 0 = auto
    // Checkpoint cache consumed/produced by the pi-grid checks, so long
    // runs can resume.
    std::optional<std::filesystem::path> cache_path;
};

// Checks that run a minimization/maximization over an empty index set pass
// vacuously; their extremal_value is DBL_MAX (for minima) or -DBL_MAX (for
// maxima) so the relation still evaluates true.

// min over k in [40000, 99999] of (pi(k) - pi(7(k+1)/8)) * log(k+1)/(k+1),
// compared against the given threshold (default 0.121243).
CheckReport verify_lemma3_small(double threshold = 0.121243,
                                const VerifyOptions& opts = {});

// min over u in u_values (subset of {2..6}) and k in [1000, 9999] of
// (pi(10^u k) - pi(7*10^u(k+1)/8)) * log(10^u(k+1)) / (10^u(k+1)) > 0.122583.
CheckReport verify_lemma3_grid(std::span<const int> u_values,
                               const VerifyOptions& opts = {});

// |pi(x) - Li(x)| < 0.0008375 x / log^2 x at every given point; each point
// must be >= 1474279333.
CheckReport verify_pi_li(std::span<const std::uint64_t> points,
                         const VerifyOptions& opts = {});

// pi(x+y; k,l) - pi(x; k,l) < 2y / (phi(k) log(y/k)) on seeded samples with
// 1 <= k < y, k <= 500, x+y <= 1e7, gcd(k,l)=1.
CheckReport verify_brun_titchmarsh(std::uint64_t trials, std::uint64_t seed,
                                   const VerifyOptions& opts = {});

// x/(phi(m) log x) < pi(x; m,l) < x/(phi(m) log x) (1 + 5/(2 log x)) on
// seeded samples with m <= 1200, gcd(m,l)=1, 50 m^2 <= x <= 1e7.
CheckReport verify_mv_small_moduli(std::uint64_t trials, std::uint64_t seed,
                                   const VerifyOptions& opts = {});

// |#{1<=n<=x : gcd(nk+l, m)=1} - phi(m) x / m| <= 2^omega(m) on seeded
// samples (m <= 1e4, gcd(k,m)=1, |l| <= m, x <= 1e5); exact integer
// comparison throughout.
CheckReport verify_lemma6(std::uint64_t trials, std::uint64_t seed,
                          const VerifyOptions& opts = {});

// 2^omega(n)/phi(n) <= 2^t/phi(P_t) for every n in [2, limit] and every t
// with P_t <= n, plus the refined bound with factor P_t/n when
// P_t <= n < P_{t+1}. Exact rational comparisons (integer cross products).
CheckReport verify_lemma8(std::uint64_t limit, const VerifyOptions& opts = {});

// gap_prime_count(pair) < both explicit right-hand sides, for pairs with
// b > a >= 10.
CheckReport verify_lemma9(std::span<const CoprimePair> pairs,
                          const VerifyOptions& opts = {});

// The six numeric endpoints of the main counting bound, one check each.
// case4 judges its first sub-family on the box x <= 100 (the largest x
// bound valid across all b >= 202, where the 0.024 endpoint is sharp) and
// additionally reports the minimum over the narrower x <= 79 box, which
// falls short of that endpoint.
CheckReport verify_case1(const VerifyOptions& opts = {});
CheckReport verify_case2(const VerifyOptions& opts = {});
CheckReport verify_case3(const VerifyOptions& opts = {});
CheckReport verify_case4(const VerifyOptions& opts = {});
CheckReport verify_case5(const VerifyOptions& opts = {});
CheckReport verify_case6(const VerifyOptions& opts = {});

// count_semigroup_primes(pair) > 0.005 S / log S for every pair; requires
// a >= 3 for all pairs.
CheckReport verify_theorem2(std::span<const CoprimePair> pairs,
                            const VerifyOptions& opts = {});

// Deterministic seeded sampler for coprime pairs with a_min <= a < b and
// frobenius(pair) <= s_max.
std::vector<CoprimePair> sample_coprime_pairs(std::uint64_t count,
                                              std::uint64_t seed,
                                              std::uint64_t a_min,
                                              std::uint64_t s_max);

} // namespace frobprimes

#endif
