#include <nldic/model2.hpp>

#include <nldic/numtheory.hpp>

namespace nldic {

Model2Params model2_derive(const MultiPoly& f, const MultiPoly& g, u64 t, u64 q, int K) {
    if (K < 2) raise(Errc::InvalidArgument, "model2: K must be >= 2");
    if (!is_prime(q)) raise(Errc::InvalidArgument, "model2: q must be prime");
    if (t >= q) raise(Errc::InvalidArgument, "model2: t must lie in [0, q)");
    if (f.nvars() != K || g.nvars() != K)
        raise(Errc::InvalidArgument, "model2: f and g must be given over K variable slots");
    if (!g.is_zero()) {
        auto gp = g.degree_profile();
        if (gp.per_variable[0] > 0)
            raise(Errc::InvalidArgument, "model2: g must not involve X1");
    }

    Model2Params params;
    params.K = K;
    params.q = q;
    params.f = f;
    params.g = g;
    params.t = t;

    for (int pos = 2; pos <= K; ++pos) {
        if (!g.substitute(pos, static_cast<i64>(t)).functionally_zero(q)) {
            Error err(Errc::ConditionViolated,
                      "model2: substituting t at position " + std::to_string(pos) +
                          " does not annihilate g");
            err.detail_a = static_cast<u64>(pos);
            throw err;
        }
    }

    auto inv = invertible_set(f, q); // also validates univariate/nonconstant f
    params.C = std::move(inv.codebook);
    params.table = std::move(inv.table);
    std::vector<u64> point(K, 0);
    for (u64 x : params.C.symbols()) {
        point[0] = x;
        params.finv.emplace(eval_mod(f, point, q), x);
    }
    point[0] = t;
    params.f_at_t = eval_mod(f, point, q);
    return params;
}

u64 model2_encode(const Model2Params& params, int user, std::size_t msg, int slot) {
    if (user < 1 || user > params.K)
        raise(Errc::InvalidArgument, "model2_encode: user index out of range");
    if (slot != 1 && slot != 2)
        raise(Errc::InvalidArgument, "model2_encode: slot must be 1 or 2");
    u64 symbol = params.C.symbol(msg); // throws IndexOutOfRange
    if (slot == 2 && user == 1) return params.t;
    return symbol;
}

Model2Decode model2_decode(const Model2Params& params, int receiver, u64 y1, u64 y2) {
    if (receiver < 1 || receiver > params.K)
        raise(Errc::InvalidArgument, "model2_decode: receiver index out of range");
    if (y1 >= params.q || y2 >= params.q)
        raise(Errc::InvalidArgument, "model2_decode: outputs must be mod-q residues");
    Model2Decode r;
    if (receiver == 1) {
        r.v = (y1 + params.q - y2 + params.f_at_t) % params.q;
    } else {
        r.v = y2;
    }
    auto it = params.finv.find(r.v);
    if (it == params.finv.end()) {
        r.ok = false;
        return r;
    }
    r.ok = true;
    r.msg = *params.C.index_of(it->second);
    return r;
}

MultiPoly model2_channel_poly(const Model2Params& params) {
    return poly_sum(params.f, params.g);
}

} // namespace nldic
