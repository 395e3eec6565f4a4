#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include <nldic/numtheory.hpp>

using namespace nldic;

// Independent oracles: trial division and naive scans.
namespace {

bool trial_division_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 naive_dlog(u64 base, u64 y, u64 p, u64 max_u) {
    u64 acc = 1;
    for (u64 u = 1; u <= max_u; ++u) {
        acc = mulmod(acc, base, p);
        if (acc == y) return u;
    }
    return 0;
}

} // namespace

TEST_CASE("is_prime matches trial division") {
    CHECK(is_prime(53));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561)); // 3 * 11 * 17, a Carmichael number
    for (u64 n = 0; n <= 5000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
    CHECK(is_prime(1009));
    CHECK(is_prime(10007));
    CHECK(is_prime(1018091)); // first prime above 1009^2
    CHECK_FALSE(is_prime(3825123056546413051ull)); // strong pseudoprime to several bases
}

TEST_CASE("mod_inv") {
    CHECK(mod_inv(3, 7) == 5);
    CHECK(mod_inv(1, 997) == 1);
    CHECK(mod_inv(2, 73) == 37);
    CHECK_THROWS_WITH_AS(mod_inv(0, 7), "mod_inv: a is divisible by the modulus", Error);
    for (u64 q : {3ull, 5ull, 97ull, 997ull})
        for (u64 a = 1; a < q; ++a) CHECK(mulmod(a, mod_inv(a, q), q) == 1);
}

TEST_CASE("odd_part") {
    auto r = odd_part(12);
    CHECK(r.two_adic_exp == 2);
    CHECK(r.d0 == 3);
    r = odd_part(1);
    CHECK(r.two_adic_exp == 0);
    CHECK(r.d0 == 1);
    r = odd_part(8);
    CHECK(r.two_adic_exp == 3);
    CHECK(r.d0 == 1);
}

TEST_CASE("crt_offset") {
    CHECK(crt_offset(1) == 3);
    CHECK(crt_offset(3) == 7);
    CHECK(crt_offset(5) == 11);
    for (u64 d0 = 1; d0 <= 99; d0 += 2) {
        u64 c = crt_offset(d0);
        CHECK(c % 4 == 3);
        CHECK(c % d0 == 1 % d0);
        if (d0 > 1) CHECK(c < 4 * d0);
        // smallest: no earlier value satisfies both congruences
        for (u64 x = 1; x < c; ++x) CHECK((x % 4 != 3 || x % d0 != 1 % d0));
    }
}

TEST_CASE("prime_in_progression") {
    CHECK(prime_in_progression({12, 7, 1, kDefaultSearchCeiling}) == 19);
    CHECK(prime_in_progression({4, 3, 1, kDefaultSearchCeiling}) == 7);
    CHECK(prime_in_progression({20, 11, 1, kDefaultSearchCeiling}) == 31);
    // n >= 1: the offset itself is never returned
    CHECK(prime_in_progression({4, 3, 0, kDefaultSearchCeiling}) == 7);
    CHECK_THROWS_AS(prime_in_progression({4, 2, 0, kDefaultSearchCeiling}), Error); // gcd 2
    CHECK_THROWS_AS(prime_in_progression({2, 25, 0, 1}), Error); // ceiling hit: 27 is composite
    SUBCASE("result is minimal in the progression") {
        for (u64 step : {4ull, 12ull, 20ull, 28ull}) {
            for (u64 off = 1; off < step; ++off) {
                if (std::gcd(step, off) != 1) continue;
                u64 p = prime_in_progression({step, off, 10, kDefaultSearchCeiling});
                CHECK(is_prime(p));
                CHECK(p % step == off % step);
                CHECK(p > 10);
                for (u64 n = 1; step * n + off < p; ++n) {
                    u64 cand = step * n + off;
                    CHECK((cand <= 10 || !trial_division_prime(cand)));
                }
            }
        }
    }
}

TEST_CASE("prime_in_interval") {
    CHECK(prime_in_interval(49, 98) == 53);
    CHECK(prime_in_interval(25, 50) == 29);
    CHECK(prime_in_interval(4, 8) == 5);
    CHECK_THROWS_AS(prime_in_interval(24, 28), Error); // 25,26,27 composite
    CHECK_THROWS_AS(prime_in_interval(0, 10), Error);  // lo must be >= 1
}

TEST_CASE("primitive_root") {
    CHECK(primitive_root(7) == 3);
    CHECK(primitive_root(5) == 2);
    CHECK(primitive_root(23) == 5);
    CHECK(primitive_root(2) == 1);
    for (u64 p = 3; p <= 997; ++p) {
        if (!is_prime(p)) continue;
        u64 e = primitive_root(p);
        CHECK(multiplicative_order(e, p) == p - 1);
        for (u64 r : prime_factors(p - 1)) CHECK(powmod(e, (p - 1) / r, p) != 1);
        // smallest-root convention
        for (u64 g = 2; g < e; ++g) CHECK(multiplicative_order(g, p) != p - 1);
    }
}

TEST_CASE("discrete_log_bounded") {
    CHECK(discrete_log_bounded(3, 6, 7, 3) == 3);
    CHECK(discrete_log_bounded(3, 3, 7, 3) == 1);
    CHECK_THROWS_AS(discrete_log_bounded(3, 1, 7, 3), Error); // 3^u in {3,2,6} for u <= 3

    SUBCASE("inverts exponentiation for primitive roots") {
        for (u64 p : {7ull, 31ull, 199ull}) {
            u64 e = primitive_root(p);
            for (u64 u = 1; u < p; ++u)
                CHECK(discrete_log_bounded(e, powmod(e, u, p), p, p - 1) == u);
        }
    }
    SUBCASE("matches the naive scan on non-generators too") {
        for (u64 p : {13ull, 17ull, 19ull}) {
            for (u64 base = 2; base < p; ++base) {
                u64 ord = multiplicative_order(base, p);
                u64 max_u = ord; // at most one solution in a window of length ord
                for (u64 y = 1; y < p; ++y) {
                    u64 naive = naive_dlog(base, y, p, max_u);
                    if (naive == 0) {
                        CHECK_THROWS_AS(discrete_log_bounded(base, y, p, max_u), Error);
                    } else {
                        CHECK(discrete_log_bounded(base, y, p, max_u) == naive);
                    }
                }
            }
        }
    }
    SUBCASE("ambiguity is reported with the colliding pair") {
        // ord(2) = 3 mod 7, so 2^1 = 2^4
        try {
            discrete_log_bounded(2, 2, 7, 6);
            FAIL("expected AmbiguousSolution");
        } catch (const Error& err) {
            CHECK(err.code() == Errc::AmbiguousSolution);
            CHECK(err.detail_a == 1);
            CHECK(err.detail_b == 4);
        }
    }
    SUBCASE("baby-step/giant-step path agrees with brute force") {
        u64 p = 99991; // forces the BSGS branch (order > 4096)
        u64 e = primitive_root(p);
        for (u64 u : {1ull, 2ull, 4096ull, 49995ull, 99990ull})
            CHECK(discrete_log_bounded(e, powmod(e, u, p), p, p - 1) == u);
    }
}

TEST_CASE("sqrt_mod") {
    auto r = sqrt_mod(10, 13);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == 6);
    CHECK(r.roots[1] == 7);
    CHECK(sqrt_mod(0, 13).roots == std::vector<u64>{0});
    CHECK(sqrt_mod(5, 13).roots.empty()); // non-residue

    SUBCASE("roots square back; residue counts are (q+1)/2") {
        for (u64 q = 3; q <= 997; ++q) {
            if (!is_prime(q)) continue;
            u64 with_roots = 0;
            for (u64 a = 0; a < q; ++a) {
                auto s = sqrt_mod(a, q);
                if (!s.roots.empty()) ++with_roots;
                for (u64 root : s.roots) CHECK(mulmod(root, root, q) == a);
                if (s.roots.size() == 2) CHECK((s.roots[0] + s.roots[1]) % q == 0);
            }
            CHECK(with_roots == (q + 1) / 2);
        }
    }
}
