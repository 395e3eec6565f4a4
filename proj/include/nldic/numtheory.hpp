#ifndef NLDIC_NUMTHEORY_HPP
#define NLDIC_NUMTHEORY_HPP

#include <vector>

#include <nldic/common.hpp>
#include <nldic/error.hpp>

namespace nldic {

// Default cap on the number of candidates examined by the prime searches.
inline constexpr u64 kDefaultSearchCeiling = 10'000'000;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Exact deterministic primality for the full 64-bit range.
bool is_prime(u64 n);

/// Multiplicative inverse of a mod prime q; throws ZeroDivisor for a ≡ 0.
u64 mod_inv(u64 a, u64 q);

struct OddPart {
    u32 two_adic_exp;
    u64 d0;
};

/// Splits d = 2^two_adic_exp * d0 with d0 odd.  Requires d >= 1.
OddPart odd_part(u64 d);

/// Smallest positive c with c ≡ 3 (mod 4) and c ≡ 1 (mod d0).  d0 must be odd.
u64 crt_offset(u64 d0);

struct ProgressionSpec {
    u64 step;
    u64 offset;
    u64 min_exclusive = 0;
    u64 search_ceiling = kDefaultSearchCeiling; // candidates tried before SearchExhausted
};

/// Smallest prime p = step*n + offset with n >= 1 and p > min_exclusive.
/// Requires gcd(step, offset) = 1; throws SearchExhausted past the ceiling.
u64 prime_in_progression(const ProgressionSpec& spec);

/// Smallest prime q with lo_exclusive < q < hi_exclusive, or EmptyInterval.
u64 prime_in_interval(u64 lo_exclusive, u64 hi_exclusive);

/// Distinct prime factors of n by trial division (intended for small n).
std::vector<u64> prime_factors(u64 n);

/// Multiplicative order of a mod prime p (a not divisible by p).
u64 multiplicative_order(u64 a, u64 p);

/// Smallest primitive root of p.  Returns 1 for p = 2.
u64 primitive_root(u64 p);

/// All u in {1, ..., max_u} with base^u ≡ y (mod p), smallest first, at most
/// `cap` of them.  base must generate a subgroup of Z_p^* containing y for a
/// nonempty result.
std::vector<u64> discrete_log_solutions(u64 base, u64 y, u64 p, u64 max_u,
                                        std::size_t cap = 2);

/// The unique u in {1, ..., max_u} with base^u ≡ y (mod p).
/// Throws NoSolution / AmbiguousSolution (pair in detail_a/detail_b).
u64 discrete_log_bounded(u64 base, u64 y, u64 p, u64 max_u);

struct SqrtResult {
    std::vector<u64> roots; // 0, 1 or 2 residues, ascending
};

/// All square roots of a mod an odd prime q (Tonelli-Shanks).
SqrtResult sqrt_mod(u64 a, u64 q);

} // namespace nldic

#endif // NLDIC_NUMTHEORY_HPP
