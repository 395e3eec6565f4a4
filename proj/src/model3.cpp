#include <nldic/model3.hpp>

#include <algorithm>

#include <nldic/numtheory.hpp>

namespace nldic {

Model3Params model3_derive(u64 q, Model3CodebookMode mode) {
    if (!is_prime(q)) raise(Errc::InvalidArgument, "model3: q must be prime");
    if (q <= 5 || q % 5 != 3) {
        raise(Errc::CongruenceViolated,
              "model3: q must be a prime > 5 with q ≡ 3 (mod 5), got " + std::to_string(q));
    }
    Model3Params params;
    params.q = q;
    params.codebook_mode = mode;
    u64 n_max = mode == Model3CodebookMode::Paper ? (q - 12) / 60 : (q >= 36 ? (q - 36) / 80 : 0);
    std::vector<u64> symbols;
    symbols.reserve(n_max + 1);
    for (u64 n = 0; n <= n_max; ++n) symbols.push_back(20 * n + 4);
    params.C = Codebook(std::move(symbols));
    return params;
}

u64 model3_encode(const Model3Params& params, std::size_t msg, int slot) {
    if (slot != 1 && slot != 2)
        raise(Errc::InvalidArgument, "model3_encode: slot must be 1 or 2");
    u64 symbol = params.C.symbol(msg);
    return slot == 1 ? symbol : symbol + 1;
}

Model3Decode model3_decode(const Model3Params& params, u64 y1, u64 y2) {
    const u64 q = params.q;
    if (y1 >= q || y2 >= q)
        raise(Errc::InvalidArgument, "model3_decode: outputs must be mod-q residues");
    Model3Decode r;
    Model3Trace& tr = r.trace;

    tr.t_sum = (y2 + 2 * q - y1 - 2) % q;
    if (tr.t_sum % 20 != 16) {
        r.outcome = Model3Outcome::MalformedT;
        return r;
    }
    tr.m = (tr.t_sum - 16) / 20;
    tr.center = params.center_mode == Model3CenterMode::Eq22
                    ? mulmod(tr.t_sum, mod_inv(4, q), q)
                    : (5 * tr.m + 1) % q;
    u64 half_y1 = mulmod(mod_inv(2, q), y1, q);
    tr.rhs = (mulmod(tr.center, tr.center, q) + q - half_y1) % q;

    auto roots = sqrt_mod(tr.rhs, q);
    if (roots.roots.empty()) {
        r.outcome = Model3Outcome::NonResidue;
        return r;
    }
    tr.l = roots.roots.front();

    // Integer candidates center +/- l, wrapped back into [0, q) when the raw
    // value leaves the range; the wrap changes the value mod 20, which is what
    // membership in C keys on.
    u64 plus = tr.center + tr.l;
    tr.candidates.push_back(plus < q ? plus : plus - q);
    u64 minus = tr.center >= tr.l ? tr.center - tr.l : tr.center + q - tr.l;
    if (minus != tr.candidates.front()) tr.candidates.push_back(minus);

    for (u64 cand : tr.candidates)
        if (params.C.index_of(cand)) tr.survivors.push_back(cand);
    std::sort(tr.survivors.begin(), tr.survivors.end());

    if (tr.survivors.empty()) {
        r.outcome = Model3Outcome::NoCandidate;
        return r;
    }
    if (tr.survivors.size() > 1) {
        r.outcome = Model3Outcome::Ambiguous;
        return r;
    }
    u64 s = tr.survivors.front();
    r.outcome = Model3Outcome::Unique;
    r.msg = *params.C.index_of(s);
    tr.alpha = static_cast<i64>(tr.t_sum) - 2 * static_cast<i64>(s);
    return r;
}

MultiPoly model3_channel_poly() {
    return parse_poly("X1*X2 + X1*X3", 3);
}

} // namespace nldic
