// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion.  Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include <nldic/analysis.hpp>
#include <nldic/json_io.hpp>
#include <nldic/numtheory.hpp>

using namespace nldic;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void criterion(int id, const char* name, bool ok, double seconds, const std::string& note = "") {
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, name, seconds,
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++g_failures;
}

bool check(bool cond, bool& ok, std::string& note, const std::string& what) {
    if (!cond) {
        ok = false;
        if (!note.empty()) note += "; ";
        note += what;
    }
    return cond;
}

ChannelSpec model2_spec(const Model2Params& p) {
    return ChannelSpec{p.K, model2_channel_poly(p), p.q, Semantics::ModQ};
}

// 1. Number-theory suite over all primes q <= 997 (dlog: p <= 199).
void criterion1() {
    Timer t;
    bool ok = true;
    std::string note;
    for (u64 q = 2; q <= 997; ++q) {
        if (!is_prime(q)) continue;
        if (q >= 3) {
            u64 with_roots = 0;
            for (u64 a = 0; a < q; ++a) {
                auto s = sqrt_mod(a, q);
                if (!s.roots.empty()) ++with_roots;
                for (u64 r : s.roots)
                    if (mulmod(r, r, q) != a) check(false, ok, note, "sqrt root mismatch");
            }
            check(with_roots == (q + 1) / 2, ok, note,
                  "sqrt residue count at q=" + std::to_string(q));
        }
        u64 e = primitive_root(q);
        if (q >= 3) {
            for (u64 r : prime_factors(q - 1))
                check(powmod(e, (q - 1) / r, q) != 1, ok, note,
                      "primitive root order at q=" + std::to_string(q));
        }
        for (u64 a = 1; a < q; ++a)
            check(mulmod(a, mod_inv(a, q), q) == 1, ok, note,
                  "mod_inv round trip at q=" + std::to_string(q));
        if (q <= 199 && q >= 3) {
            for (u64 u = 1; u < q; ++u) {
                u64 got = discrete_log_bounded(e, powmod(e, u, q), q, q - 1);
                check(got == u, ok, note, "dlog inversion at p=" + std::to_string(q));
            }
        }
    }
    criterion(1, "number-theory suite (primes <= 997, dlog p <= 199)", ok && t.seconds() < 10.0,
              t.seconds(), note);
}

// 2. Invertible sets for f in {X^2, X^3, X^5 + X}, all primes q <= 199.
void criterion2() {
    Timer t;
    bool ok = true;
    std::string note;
    struct Fx {
        const char* text;
        u64 deg;
    };
    for (auto [text, deg] : {Fx{"X1^2", 2}, Fx{"X1^3", 3}, Fx{"X1^5 + X1", 5}}) {
        MultiPoly f = parse_poly(text, 1);
        for (u64 q = 2; q <= 199; ++q) {
            if (!is_prime(q)) continue;
            auto inv = invertible_set(f, q);
            std::set<u64> images;
            std::vector<u64> pt(1);
            for (u64 x : inv.codebook.symbols()) {
                pt[0] = x;
                images.insert(eval_mod(f, pt, q));
            }
            check(images.size() == inv.codebook.size(), ok, note,
                  std::string(text) + " not injective at q=" + std::to_string(q));
            check(inv.codebook.size() >= (q + deg - 1) / deg, ok, note,
                  std::string(text) + " size bound at q=" + std::to_string(q));
        }
    }
    criterion(2, "invertible sets: |f(C)| = |C| and |C| >= ceil(q/deg f)", ok, t.seconds(), note);
}

// 3. Model II zero-error: exhaustive at q=5, sampled at q in {13,29,53,101}.
void criterion3() {
    Timer t;
    bool ok = true;
    std::string note;
    auto f = parse_poly("X1^2", 3);
    auto g = parse_poly("X2*X3", 3);
    {
        auto params = model2_derive(f, g, 0, 5, 3);
        auto rep = verify_zero_error(model2_spec(params), params, Scope::Exhaustive());
        check(rep.total_tuples == 27, ok, note, "tuple count at q=5");
        check(rep.failures == 0 && rep.ambiguous == 0, ok, note, "failures at q=5");
    }
    for (u64 q : {13ull, 29ull, 53ull, 101ull}) {
        auto params = model2_derive(f, g, 0, q, 3);
        auto rep = verify_zero_error(model2_spec(params), params, Scope::Sampled(1000, 2024));
        check(rep.failures == 0 && rep.ambiguous == 0, ok, note,
              "failures at q=" + std::to_string(q));
    }
    criterion(3, "model II zero-error (exhaustive q=5; 1000 samples q=13,29,53,101)",
              ok && t.seconds() < 5.0, t.seconds(), note);
}

// 4. Model I zero-error under integer-valued semantics, both instances.
void criterion4() {
    Timer t;
    bool ok = true;
    std::string note;
    {
        auto h = parse_poly("X1 + X2*X3", 3);
        auto params = model1_derive(1, 1, h, Model1Mode::PaperLiteral);
        check(params.p == 7 && params.q == 53, ok, note, "derived (p, q) for d=1");
        ChannelSpec spec{3, h, params.q, Semantics::Integer};
        auto rep = verify_zero_error(spec, CodecParams(params), Scope::Exhaustive());
        check(rep.total_tuples == 27, ok, note, "tuple count for d=1");
        check(rep.failures == 0 && rep.ambiguous == 0, ok, note, "failures for d=1");
    }
    {
        auto h = parse_poly("X1^3 + X2^2*X3^2", 3);
        auto params = model1_derive(1, 3, h, Model1Mode::Repaired);
        check(params.p == 23 && params.q == 541, ok, note, "derived (p, q) for d=3");
        ChannelSpec spec{3, h, params.q, Semantics::Integer};
        auto rep = verify_zero_error(spec, CodecParams(params), Scope::Exhaustive());
        check(rep.total_tuples == 1331, ok, note, "tuple count for d=3");
        check(rep.failures == 0 && rep.ambiguous == 0, ok, note, "failures for d=3");
    }
    criterion(4, "model I zero-error, integer semantics (27 and 1331 tuples)",
              ok && t.seconds() < 30.0, t.seconds(), note);
}

// 5. Model I under mod-q semantics: reported failures equal the
//    collision/divisibility oracle count exactly.
void criterion5() {
    Timer t;
    bool ok = true;
    std::string note;
    auto h = parse_poly("X1 + X2*X3", 3);
    auto params = model1_derive(1, 1, h, Model1Mode::PaperLiteral);
    ChannelSpec spec{3, h, params.q, Semantics::ModQ};
    auto rep = verify_zero_error(spec, CodecParams(params), Scope::Exhaustive());
    check(rep.failures + rep.ambiguous == rep.oracle.undecodable_pairs, ok, note,
          "failures " + std::to_string(rep.failures) + " != oracle " +
              std::to_string(rep.oracle.undecodable_pairs));
    check(rep.oracle_agreement, ok, note, "oracle disagreement");
    check(rep.decoded_ok + rep.failures + rep.ambiguous == rep.decodes, ok, note,
          "counting identity");
    criterion(5, "model I mod-q failures match the output-collision/divisibility oracle", ok,
              t.seconds(), note);
}

// 6. Paper-literal progression at d=3 trips the injectivity self-check at
//    p=19 with colliding pair (1, 7).
void criterion6() {
    Timer t;
    bool ok = true;
    std::string note;
    check(crt_offset(3) == 7, ok, note, "crt offset");
    check(prime_in_progression({12, 7, 1, kDefaultSearchCeiling}) == 19, ok, note, "progression prime");
    check(primitive_root(19) == 2, ok, note, "primitive root of 19");
    bool threw = false;
    try {
        model1_derive(1, 3, parse_poly("X1^3 + X2^2*X3^2", 3), Model1Mode::PaperLiteral);
    } catch (const Error& err) {
        threw = true;
        check(err.code() == Errc::InjectivityViolation, ok, note, "wrong error kind");
        check(err.detail_a == 1 && err.detail_b == 7, ok, note, "wrong colliding pair");
    }
    check(threw, ok, note, "no InjectivityViolation raised");
    criterion(6, "paper-literal d=3 raises InjectivityViolation (1, 7) at p=19", ok, t.seconds(),
              note);
}

// 7. Model III pipeline at q=73 and q=193.
void criterion7() {
    Timer t;
    bool ok = true;
    std::string note;
    {
        auto params = model3_derive(73, Model3CodebookMode::Paper);
        check(params.C.symbols() == std::vector<u64>{4, 24}, ok, note, "q=73 codebook");
        check(params.C.size() > (73.0 - 12.0) / 60.0, ok, note, "q=73 size bound");
        // all-4s tuple: y1 = 32, y2 = 50
        auto dec = model3_decode(params, 32, 50);
        check(dec.outcome == Model3Outcome::Unique && dec.msg == 0, ok, note, "all-4s decode");
        check(dec.trace.t_sum == 16 && dec.trace.l == 0, ok, note, "all-4s trace");
    }
    {
        auto params = model3_derive(193, Model3CodebookMode::Paper);
        ChannelSpec spec{3, model3_channel_poly(), 193, Semantics::ModQ};
        auto rep = verify_zero_error(spec, CodecParams(params), Scope::Exhaustive());
        check(rep.total_tuples == 64, ok, note, "q=193 tuple count");
        check(rep.ambiguous >= 2, ok, note, "q=193 ambiguity count");
        bool found = false;
        for (const auto& ex : rep.exemplars)
            if (ex.symbols == std::vector<u64>{4, 24, 24} && ex.receiver == 1 &&
                ex.kind == "Ambiguous")
                found = true;
        check(found, ok, note, "missing (4,24,24) receiver-1 ambiguity");
        check(rep.oracle_agreement, ok, note, "q=193 oracle disagreement");
    }
    criterion(7, "model III pipeline (q=73 unique decode; q=193 ambiguity vs oracle)",
              ok && t.seconds() < 5.0, t.seconds(), note);
}

// 8. DoF trend rows computed from the constructed codebooks.
void criterion8() {
    Timer t;
    bool ok = true;
    std::string note;
    auto f = parse_poly("X1^2", 3);
    auto g = parse_poly("X2*X3", 3);
    std::vector<u64> qs{101, 1009, 10007};
    auto rows = dof_sweep_model2(f, g, 0, 3, qs);
    for (const auto& r : rows) check(r.ok, ok, note, "model 2 row skipped");
    if (ok) {
        check(rows[0].row.dof_ratio < rows[1].row.dof_ratio &&
                  rows[1].row.dof_ratio < rows[2].row.dof_ratio,
              ok, note, "model 2 ratios not strictly increasing");
        check(rows[2].row.dof_ratio >= 1.38, ok, note,
              "model 2 ratio at q=10007 is " + std::to_string(rows[2].row.dof_ratio));
    }
    auto m1 = dof_sweep_model1(1, 1, parse_poly("X1 + X2*X3", 3), Model1Mode::Repaired, 1009);
    check(m1.ok, ok, note, "model 1 row skipped: " + m1.skip_reason);
    if (m1.ok) {
        check(m1.row.codebook_size == 504, ok, note, "model 1 codebook size");
        check(m1.row.dof_ratio >= 1.28, ok, note,
              "model 1 ratio is " + std::to_string(m1.row.dof_ratio));
    }
    criterion(8, "dof trend (model II >= 1.38 at q=10007, increasing; model I p=1009 >= 1.28)",
              ok && t.seconds() < 10.0, t.seconds(), note);
}

// 9. Theorem 1 checker fixtures and the Remark-1 cap on every sweep row.
void criterion9() {
    Timer t;
    bool ok = true;
    std::string note;
    {
        auto rep = check_theorem1(parse_poly("X1^2 + X2*X3", 3), 3, 5);
        check(rep.condition1_witnesses == std::vector<int>{2, 3}, ok, note,
              "condition-1 witnesses");
        check(rep.implied_bound == 1.5, ok, note, "implied bound");
    }
    {
        auto h = parse_poly("X1^2 + X2^2", 2);
        auto rep5 = check_theorem1(h, 2, 5);
        auto rep7 = check_theorem1(h, 2, 7);
        check(rep5.condition2_results.at(0).holds, ok, note, "K=2 condition 2 at probe 5");
        check(rep5.condition2_results.at(0).holds == rep7.condition2_results.at(0).holds, ok,
              note, "probe 5 vs 7 verdicts differ");
    }
    {
        std::vector<SweepEntry> all;
        auto f = parse_poly("X1^2", 3);
        auto g = parse_poly("X2*X3", 3);
        std::vector<u64> q2{101, 1009, 10007};
        for (auto& e : dof_sweep_model2(f, g, 0, 3, q2)) all.push_back(e);
        std::vector<u64> q3;
        for (u64 q = 7; q <= 500; ++q)
            if (is_prime(q) && q % 5 == 3) q3.push_back(q);
        for (auto& e : dof_sweep_model3(q3, Model3CodebookMode::Paper)) all.push_back(e);
        all.push_back(dof_sweep_model1(1, 1, parse_poly("X1 + X2*X3", 3), Model1Mode::PaperLiteral));
        for (const auto& e : all) {
            if (!e.ok) {
                check(false, ok, note, "sweep row skipped at q=" + std::to_string(e.q));
                continue;
            }
            check(e.row.dof_ratio <= e.row.K, ok, note,
                  "dof_ratio > K at q=" + std::to_string(e.q));
        }
    }
    criterion(9, "theorem 1 checker fixtures; dof_ratio <= K on every sweep row",
              ok && t.seconds() < 5.0, t.seconds(), note);
}

// 10. Determinism: same seed, different worker counts, byte-identical reports.
void criterion10() {
    Timer t;
    bool ok = true;
    std::string note;
    {
        auto h = parse_poly("X1 + X2*X3", 3);
        auto params = model1_derive(1, 1, h, Model1Mode::PaperLiteral);
        ChannelSpec spec{3, h, params.q, Semantics::ModQ};
        auto a = report_json(verify_zero_error(spec, CodecParams(params), Scope::Exhaustive(), 1));
        auto b = report_json(verify_zero_error(spec, CodecParams(params), Scope::Exhaustive(), 4));
        check(a.dump() == b.dump(), ok, note, "model 1 exhaustive reports differ");
    }
    {
        auto params = model2_derive(parse_poly("X1^2", 3), parse_poly("X2*X3", 3), 0, 101, 3);
        auto a = report_json(
            verify_zero_error(model2_spec(params), params, Scope::Sampled(2000, 99), 1));
        auto b = report_json(
            verify_zero_error(model2_spec(params), params, Scope::Sampled(2000, 99), 5));
        check(a.dump() == b.dump(), ok, note, "model 2 sampled reports differ");
    }
    {
        auto params = model3_derive(193, Model3CodebookMode::Paper);
        ChannelSpec spec{3, model3_channel_poly(), 193, Semantics::ModQ};
        auto a = report_json(verify_zero_error(spec, CodecParams(params), Scope::Exhaustive(), 1));
        auto b = report_json(verify_zero_error(spec, CodecParams(params), Scope::Exhaustive(), 3));
        check(a.dump() == b.dump(), ok, note, "model 3 exhaustive reports differ");
    }
    criterion(10, "byte-identical reports across worker counts", ok, t.seconds(), note);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures == 0) std::printf("all 10 acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures;
}
