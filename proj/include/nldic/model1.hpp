#ifndef NLDIC_MODEL1_HPP
#define NLDIC_MODEL1_HPP

#include <optional>

#include <nldic/codebook.hpp>

namespace nldic {

/// PaperLiteral derives the inner prime from the progression (4*d0)n + c with
/// c ≡ 3 (mod 4), c ≡ 1 (mod d0).  Repaired keeps p ≡ 3 (mod 4) but requires
/// gcd(p-1, d0) = 1 instead, which is what the decoder's uniqueness argument
/// actually needs; the two coincide for d0 = 1.
enum class Model1Mode { PaperLiteral, Repaired };

struct Model1Params {
    i64 a = 0;          // leading coefficient of the desired-signal term
    u32 d = 0;          // its exponent
    u32 two_adic_exp = 0;
    u64 d0 = 0;         // d = 2^two_adic_exp * d0
    u64 c = 0;          // progression offset used in the prime search
    u64 p = 0;          // inner prime
    u64 q = 0;          // field prime, p^2 < q < 2p^2
    u64 e = 0;          // primitive root of p
    Codebook C;         // p * (e^k mod p), k = 1 .. (p-1)/2
    Model1Mode mode = Model1Mode::PaperLiteral;
    u64 p_pow_d = 0;
    u64 p_pow_d1 = 0;   // p^(d+1)
};

/// Derives the single-slot scheme for a channel whose unique minimal-degree
/// term is a*X1^d with every other term of total degree >= d+1.
///
/// p_override skips the progression search (p must still be prime and > a);
/// q_override replaces the interval search (must be prime in (p^2, 2p^2)).
/// Always runs the injectivity self-check u -> e^(u*d); a violation throws
/// InjectivityViolation with the colliding pair in detail_a/detail_b.
Model1Params model1_derive(i64 a, u32 d, const MultiPoly& h, Model1Mode mode,
                           std::optional<u64> p_override = std::nullopt,
                           std::optional<u64> q_override = std::nullopt);

u64 model1_encode(const Model1Params& params, std::size_t msg);

enum class Model1Status { Ok, NotDivisible, NoSolution, Ambiguous };

struct Model1Decode {
    Model1Status status = Model1Status::Ok;
    std::size_t msg = 0;
    u64 u = 0;       // exponent recovered from the bounded discrete log
    u64 symbol = 0;
    u64 y_prime = 0; // received value mod p^(d+1)
};

/// Decodes a received value (exact integer, or a mod-q residue; a residue that
/// lost the p^d structure comes back as NotDivisible rather than a panic).
Model1Decode model1_decode(const Model1Params& params, i128 y);

} // namespace nldic

#endif // NLDIC_MODEL1_HPP
