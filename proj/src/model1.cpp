#include <nldic/model1.hpp>

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <nldic/numtheory.hpp>

namespace nldic {

namespace {

void check_structure(i64 a, u32 d, const MultiPoly& h) {
    if (a < 1) raise(Errc::StructureViolation, "model1: leading coefficient a must be positive");
    if (d < 1) raise(Errc::StructureViolation, "model1: exponent d must be >= 1");
    if (h.is_zero()) raise(Errc::ZeroPolynomial, "model1: h is the zero polynomial");
    auto mins = h.min_degree_terms();
    if (mins.size() != 1)
        raise(Errc::StructureViolation,
              "model1: h must have a unique minimal-degree term (found " +
                  std::to_string(mins.size()) + ")");
    const Monomial& m = mins.front();
    bool shape_ok = m.coeff == a && m.exps[0] == d;
    for (std::size_t j = 1; j < m.exps.size() && shape_ok; ++j)
        if (m.exps[j] != 0) shape_ok = false;
    if (!shape_ok)
        raise(Errc::StructureViolation, "model1: minimal-degree term is not a*X1^d");
    // Uniqueness of the minimal term already forces every other term to have
    // total degree >= d+1.
}

u64 repaired_offset(u64 d0) {
    // Smallest residue c' mod 4*d0 with c' ≡ 3 (mod 4), gcd(c', 4*d0) = 1 and
    // gcd(c'-1, d0) = 1; every prime in that progression then has p-1 coprime
    // to d0.
    u64 step = 4 * d0;
    for (u64 c = 3; c <= step; c += 4) {
        if (std::gcd(c, step) != 1) continue;
        if (std::gcd(c - 1, d0) != 1) continue;
        return c;
    }
    raise(Errc::SearchExhausted, "model1: no admissible progression offset");
}

u64 checked_pow_u64(u64 base, u32 exp) {
    u128 r = 1;
    for (u32 i = 0; i < exp; ++i) {
        r *= base;
        if (r > UINT64_MAX) raise(Errc::Overflow, "model1: p^(d+1) exceeds 64-bit range");
    }
    return static_cast<u64>(r);
}

} // namespace

Model1Params model1_derive(i64 a, u32 d, const MultiPoly& h, Model1Mode mode,
                           std::optional<u64> p_override, std::optional<u64> q_override) {
    check_structure(a, d, h);

    Model1Params params;
    params.a = a;
    params.d = d;
    params.mode = mode;
    auto op = odd_part(d);
    params.two_adic_exp = op.two_adic_exp;
    params.d0 = op.d0;
    params.c = mode == Model1Mode::PaperLiteral ? crt_offset(params.d0)
                                                : repaired_offset(params.d0);

    if (p_override) {
        u64 p = *p_override;
        if (!is_prime(p)) raise(Errc::InvalidArgument, "model1: explicit p is not prime");
        if (p <= static_cast<u64>(a))
            raise(Errc::InvalidArgument, "model1: explicit p must exceed a");
        params.p = p;
    } else {
        ProgressionSpec spec;
        spec.step = 4 * params.d0;
        spec.offset = params.c;
        spec.min_exclusive = static_cast<u64>(a);
        params.p = prime_in_progression(spec);
    }

    u64 p2 = checked_pow_u64(params.p, 2);
    if (q_override) {
        u64 q = *q_override;
        if (!is_prime(q)) raise(Errc::InvalidArgument, "model1: explicit q is not prime");
        if (q <= p2 || q >= 2 * p2)
            raise(Errc::InvalidArgument, "model1: explicit q must lie in (p^2, 2p^2)");
        params.q = q;
    } else {
        params.q = prime_in_interval(p2, 2 * p2);
    }

    params.e = primitive_root(params.p);
    params.p_pow_d = checked_pow_u64(params.p, d);
    params.p_pow_d1 = checked_pow_u64(params.p, d + 1);

    u64 half = (params.p - 1) / 2;
    std::vector<u64> symbols;
    symbols.reserve(half);
    {
        u64 w = 1;
        for (u64 k = 1; k <= half; ++k) {
            w = mulmod(w, params.e, params.p);
            symbols.push_back(params.p * w);
        }
    }
    std::sort(symbols.begin(), symbols.end());
    params.C = Codebook(std::move(symbols));

    // Self-check: u -> e^(u*d) mod p must be injective on 1..(p-1)/2, or the
    // decoder's discrete log is not well defined.
    {
        std::unordered_map<u64, u64> seen;
        u64 base = powmod(params.e, d, params.p);
        u64 acc = 1;
        for (u64 u = 1; u <= half; ++u) {
            acc = mulmod(acc, base, params.p);
            auto [it, inserted] = seen.emplace(acc, u);
            if (!inserted) {
                Error err(Errc::InjectivityViolation,
                          "model1: e^(u*d) collides for u=" + std::to_string(it->second) +
                              " and v=" + std::to_string(u) + " at p=" + std::to_string(params.p));
                err.detail_a = it->second;
                err.detail_b = u;
                throw err;
            }
        }
    }
    return params;
}

u64 model1_encode(const Model1Params& params, std::size_t msg) {
    return params.C.symbol(msg);
}

Model1Decode model1_decode(const Model1Params& params, i128 y) {
    if (y < 0) raise(Errc::InvalidArgument, "model1_decode: negative observation");
    Model1Decode r;
    r.y_prime = static_cast<u64>(static_cast<u128>(y) % params.p_pow_d1);
    if (r.y_prime % params.p_pow_d != 0) {
        r.status = Model1Status::NotDivisible;
        return r;
    }
    u64 z = r.y_prime / params.p_pow_d; // a * w^d mod p for a clean observation
    if (z == 0) {
        r.status = Model1Status::NoSolution;
        return r;
    }
    u64 target = mulmod(mod_inv(static_cast<u64>(params.a), params.p), z, params.p);
    u64 base = powmod(params.e, params.d, params.p);
    auto us = discrete_log_solutions(base, target, params.p, (params.p - 1) / 2, 2);
    if (us.empty()) {
        r.status = Model1Status::NoSolution;
        return r;
    }
    if (us.size() > 1) {
        r.status = Model1Status::Ambiguous;
        r.u = us[0];
        return r;
    }
    r.u = us[0];
    u64 w = powmod(params.e, r.u, params.p);
    r.symbol = params.p * w;
    auto idx = params.C.index_of(r.symbol);
    if (!idx) {
        // e^u with u <= (p-1)/2 is always a codeword; reaching here means the
        // params object was built inconsistently.
        raise(Errc::Internal, "model1_decode: recovered symbol not in codebook");
    }
    r.msg = *idx;
    return r;
}

} // namespace nldic
