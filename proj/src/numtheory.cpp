#include <nldic/numtheory.hpp>

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace nldic {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ZeroDivisor: return "ZeroDivisor";
        case Errc::SearchExhausted: return "SearchExhausted";
        case Errc::EmptyInterval: return "EmptyInterval";
        case Errc::NoSolution: return "NoSolution";
        case Errc::AmbiguousSolution: return "AmbiguousSolution";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::Overflow: return "Overflow";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::StructureViolation: return "StructureViolation";
        case Errc::InjectivityViolation: return "InjectivityViolation";
        case Errc::ConditionViolated: return "ConditionViolated";
        case Errc::CongruenceViolated: return "CongruenceViolated";
        case Errc::NotDivisible: return "NotDivisible";
        case Errc::NotInImage: return "NotInImage";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace {

bool mr_composite(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is exact for all 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (mr_composite(n, a, d, s)) return false;
    }
    return true;
}

u64 mod_inv(u64 a, u64 q) {
    a %= q;
    if (a == 0) raise(Errc::ZeroDivisor, "mod_inv: a is divisible by the modulus");
    // q prime, so Fermat applies.
    return powmod(a, q - 2, q);
}

OddPart odd_part(u64 d) {
    if (d == 0) raise(Errc::InvalidArgument, "odd_part: d must be positive");
    OddPart r{0, d};
    while ((r.d0 & 1) == 0) {
        r.d0 >>= 1;
        ++r.two_adic_exp;
    }
    return r;
}

u64 crt_offset(u64 d0) {
    if (d0 == 0 || (d0 & 1) == 0) raise(Errc::InvalidArgument, "crt_offset: d0 must be odd");
    for (u64 c = 3;; c += 4) {
        if (c % d0 == 1 % d0) return c;
    }
}

u64 prime_in_progression(const ProgressionSpec& spec) {
    if (spec.step == 0 || spec.offset == 0)
        raise(Errc::InvalidArgument, "prime_in_progression: step and offset must be positive");
    if (std::gcd(spec.step, spec.offset) != 1)
        raise(Errc::InvalidArgument, "prime_in_progression: step and offset must be coprime");
    for (u64 n = 1; n <= spec.search_ceiling; ++n) {
        u128 cand = static_cast<u128>(spec.step) * n + spec.offset;
        if (cand > UINT64_MAX) break;
        u64 p = static_cast<u64>(cand);
        if (p > spec.min_exclusive && is_prime(p)) return p;
    }
    raise(Errc::SearchExhausted, "prime_in_progression: no prime below the search ceiling");
}

u64 prime_in_interval(u64 lo_exclusive, u64 hi_exclusive) {
    if (lo_exclusive < 1) raise(Errc::InvalidArgument, "prime_in_interval: lower bound must be >= 1");
    for (u64 q = lo_exclusive + 1; q < hi_exclusive; ++q) {
        if (is_prime(q)) return q;
    }
    raise(Errc::EmptyInterval, "prime_in_interval: no prime strictly inside the interval");
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 p = 2; static_cast<u128>(p) * p <= n; ++p) {
        if (n % p == 0) {
            fs.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

u64 multiplicative_order(u64 a, u64 p) {
    a %= p;
    if (a == 0) raise(Errc::InvalidArgument, "multiplicative_order: a divisible by p");
    u64 ord = p - 1;
    for (u64 r : prime_factors(p - 1)) {
        while (ord % r == 0 && powmod(a, ord / r, p) == 1) ord /= r;
    }
    return ord;
}

u64 primitive_root(u64 p) {
    if (p == 2) return 1;
    auto factors = prime_factors(p - 1);
    for (u64 e = 2; e < p; ++e) {
        bool primitive = true;
        for (u64 r : factors) {
            if (powmod(e, (p - 1) / r, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return e;
    }
    raise(Errc::Internal, "primitive_root: no generator found (p not prime?)");
}

namespace {

// Minimal u in [0, ord) with base^u ≡ y (mod p), where ord is the order of
// base.  Returns ord (i.e. one past the range) when y is not in <base>.
u64 dlog_minimal(u64 base, u64 y, u64 p, u64 ord) {
    if (powmod(y, ord, p) != 1) return ord;
    if (ord <= 4096) {
        u64 acc = 1;
        for (u64 u = 0; u < ord; ++u) {
            if (acc == y) return u;
            acc = mulmod(acc, base, p);
        }
        return ord;
    }
    // Baby-step/giant-step over the subgroup generated by base.
    u64 m = 1;
    while (static_cast<u128>(m) * m < ord) ++m;
    std::unordered_map<u64, u64> baby; // value -> smallest exponent
    baby.reserve(m * 2);
    u64 acc = 1;
    for (u64 j = 0; j < m; ++j) {
        baby.emplace(acc, j);
        acc = mulmod(acc, base, p);
    }
    u64 giant = powmod(mod_inv(base, p), m, p);
    u64 cur = y % p;
    for (u64 i = 0; i * m < ord + m; ++i) {
        auto it = baby.find(cur);
        if (it != baby.end()) {
            u64 u = i * m + it->second;
            if (u < ord) return u;
        }
        cur = mulmod(cur, giant, p);
    }
    return ord;
}

} // namespace

std::vector<u64> discrete_log_solutions(u64 base, u64 y, u64 p, u64 max_u, std::size_t cap) {
    base %= p;
    y %= p;
    if (base == 0 || y == 0) return {};
    if (max_u == 0) return {};
    u64 ord = multiplicative_order(base, p);
    u64 u0 = dlog_minimal(base, y, p, ord);
    if (u0 == ord && y != 1) return {};
    if (u0 == 0) u0 = ord; // y ≡ 1: smallest positive exponent is the order
    std::vector<u64> us;
    for (u64 u = u0; u <= max_u && us.size() < cap; u += ord) us.push_back(u);
    return us;
}

u64 discrete_log_bounded(u64 base, u64 y, u64 p, u64 max_u) {
    auto us = discrete_log_solutions(base, y, p, max_u, 2);
    if (us.empty())
        raise(Errc::NoSolution, "discrete_log_bounded: no exponent in range");
    if (us.size() > 1) {
        Error err(Errc::AmbiguousSolution, "discrete_log_bounded: several exponents in range");
        err.detail_a = us[0];
        err.detail_b = us[1];
        throw err;
    }
    return us[0];
}

SqrtResult sqrt_mod(u64 a, u64 q) {
    if (q < 3 || (q & 1) == 0 || !is_prime(q))
        raise(Errc::InvalidArgument, "sqrt_mod: modulus must be an odd prime");
    a %= q;
    if (a == 0) return {{0}};
    if (powmod(a, (q - 1) / 2, q) != 1) return {}; // non-residue
    u64 r;
    if (q % 4 == 3) {
        r = powmod(a, (q + 1) / 4, q);
    } else {
        // Tonelli-Shanks.
        u64 s0 = q - 1;
        u32 e = 0;
        while ((s0 & 1) == 0) {
            s0 >>= 1;
            ++e;
        }
        u64 z = 2;
        while (powmod(z, (q - 1) / 2, q) != q - 1) ++z;
        u64 c = powmod(z, s0, q);
        u64 t = powmod(a, s0, q);
        r = powmod(a, (s0 + 1) / 2, q);
        u32 m = e;
        while (t != 1) {
            u64 tt = t;
            u32 i = 0;
            while (tt != 1) {
                tt = mulmod(tt, tt, q);
                ++i;
            }
            u64 b = c;
            for (u32 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, q);
            m = i;
            c = mulmod(b, b, q);
            t = mulmod(t, c, q);
            r = mulmod(r, b, q);
        }
    }
    u64 r2 = q - r;
    if (r == r2) return {{r}};
    return {{std::min(r, r2), std::max(r, r2)}};
}

} // namespace nldic
