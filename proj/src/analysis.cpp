#include <nldic/analysis.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

#include <nldic/numtheory.hpp>

namespace nldic {

// ---------------------------------------------------------------------------
// check_theorem1
// ---------------------------------------------------------------------------

BoundReport check_theorem1(const MultiPoly& h, int K, u64 probe_q) {
    if (h.is_zero()) raise(Errc::ZeroPolynomial, "check_theorem1: h is zero");
    if (h.nvars() != K) raise(Errc::InvalidArgument, "check_theorem1: h must have K variables");
    if (K < 2) raise(Errc::InvalidArgument, "check_theorem1: K must be >= 2");
    if (!is_prime(probe_q)) raise(Errc::InvalidArgument, "check_theorem1: probe must be prime");
    u128 budget = 1;
    for (int i = 0; i <= K; ++i) {
        budget *= probe_q;
        if (budget > 1'000'000)
            raise(Errc::BudgetExceeded, "check_theorem1: probe_q^(K+1) exceeds 10^6");
    }

    BoundReport rep;
    rep.K = K;
    rep.probe_q = probe_q;

    auto prof = h.degree_profile();
    for (int j = 2; j <= K; ++j)
        if (prof.per_variable[j - 1] == 1) rep.condition1_witnesses.push_back(j);

    const u64 q = probe_q;
    u64 assignments = 1;
    for (int i = 0; i < K - 1; ++i) assignments *= q;

    for (int j = 2; j <= K; ++j) {
        auto args_j = receiver_arguments(j, K);
        Condition2Result res;
        res.j = j;
        std::vector<u64> x(K, 0), rot(K, 0);
        std::vector<i64> seen_g(q, -1); // indexed by F value
        for (u64 asg = 0; asg < assignments; ++asg) {
            u64 rem = asg;
            for (int i = 1; i <= K; ++i) {
                if (i == j) continue;
                x[i - 1] = rem % q;
                rem /= q;
            }
            std::fill(seen_g.begin(), seen_g.end(), -1);
            bool violated = false;
            for (u64 xj = 0; xj < q && !violated; ++xj) {
                x[j - 1] = xj;
                u64 fv = eval_mod(h, x, q);
                for (int s = 0; s < K; ++s) rot[s] = x[args_j[s] - 1];
                u64 gv = eval_mod(h, rot, q);
                if (seen_g[fv] < 0) seen_g[fv] = static_cast<i64>(gv);
                else if (seen_g[fv] != static_cast<i64>(gv)) violated = true;
            }
            if (violated) ++res.violating_assignments;
        }
        res.holds = res.violating_assignments == 0;
        rep.condition2_results.push_back(res);
    }

    bool any = !rep.condition1_witnesses.empty();
    for (const auto& r : rep.condition2_results) any = any || r.holds;
    rep.implied_bound = any ? K / 2.0 : static_cast<double>(K);
    return rep;
}

// ---------------------------------------------------------------------------
// verify_zero_error
// ---------------------------------------------------------------------------

namespace {

enum class Outcome : u8 {
    OkCorrect,
    WrongMessage,
    NotDivisible,
    NoSolution,
    Ambiguous,
    NotInImage,
    MalformedT,
    NonResidue,
    NoCandidate,
};

std::string outcome_kind(Outcome o, int model) {
    switch (o) {
        case Outcome::OkCorrect: return "OkCorrect";
        case Outcome::WrongMessage: return "WrongMessage";
        case Outcome::NotDivisible: return "NotDivisible";
        case Outcome::NoSolution: return "NoSolution";
        case Outcome::Ambiguous: return model == 1 ? "AmbiguousSolution" : "Ambiguous";
        case Outcome::NotInImage: return "NotInImage";
        case Outcome::MalformedT: return "MalformedT";
        case Outcome::NonResidue: return "NonResidue";
        case Outcome::NoCandidate: return "NoCandidate";
    }
    return "Unknown";
}

struct OracleEntry {
    u64 tuples = 0;
    std::set<std::size_t> msgs;
};

using OracleMap = std::unordered_map<std::string, OracleEntry>;

void append_key(std::string& key, i128 v) {
    key.append(reinterpret_cast<const char*>(&v), sizeof(v));
}

struct Harness {
    const ChannelSpec& spec;
    const CodecParams& codec;
    int model;
    int K;
    std::size_t csize;
    int slots;

    static Harness make(const ChannelSpec& spec, const CodecParams& codec) {
        spec.validate();
        int model = static_cast<int>(codec.index()) + 1;
        std::size_t csize = 0;
        int slots = 0;
        if (const auto* p1 = std::get_if<Model1Params>(&codec)) {
            if (p1->q != spec.q) raise(Errc::InvalidArgument, "verify: codec q != channel q");
            auto mins = spec.h.min_degree_terms();
            bool shape = mins.size() == 1 && mins[0].coeff == p1->a && mins[0].exps[0] == p1->d &&
                         mins[0].total_degree() == p1->d;
            if (!shape)
                raise(Errc::InvalidArgument,
                      "verify: channel h does not have the codec's a*X1^d minimal term");
            csize = p1->C.size();
            slots = 1;
        } else if (const auto* p2 = std::get_if<Model2Params>(&codec)) {
            if (p2->q != spec.q) raise(Errc::InvalidArgument, "verify: codec q != channel q");
            if (p2->K != spec.K) raise(Errc::InvalidArgument, "verify: codec K != channel K");
            if (spec.semantics != Semantics::ModQ)
                raise(Errc::InvalidArgument, "verify: model 2 runs under mod-q semantics");
            if (!(model2_channel_poly(*p2) == spec.h))
                raise(Errc::InvalidArgument, "verify: channel h does not match f + g");
            csize = p2->C.size();
            slots = 2;
        } else {
            const auto& p3 = std::get<Model3Params>(codec);
            if (p3.q != spec.q) raise(Errc::InvalidArgument, "verify: codec q != channel q");
            if (spec.K != 3) raise(Errc::InvalidArgument, "verify: model 3 requires K = 3");
            if (spec.semantics != Semantics::ModQ)
                raise(Errc::InvalidArgument, "verify: model 3 runs under mod-q semantics");
            if (!(model3_channel_poly() == spec.h))
                raise(Errc::InvalidArgument, "verify: channel h is not X1*X2 + X1*X3");
            csize = p3.C.size();
            slots = 2;
        }
        return Harness{spec, codec, model, spec.K, csize, slots};
    }

    void encode(const std::size_t* msgs, std::vector<std::vector<u64>>& xs) const {
        xs.assign(slots, std::vector<u64>(K));
        if (const auto* p1 = std::get_if<Model1Params>(&codec)) {
            for (int u = 0; u < K; ++u) xs[0][u] = model1_encode(*p1, msgs[u]);
        } else if (const auto* p2 = std::get_if<Model2Params>(&codec)) {
            for (int u = 0; u < K; ++u) {
                xs[0][u] = model2_encode(*p2, u + 1, msgs[u], 1);
                xs[1][u] = model2_encode(*p2, u + 1, msgs[u], 2);
            }
        } else {
            const auto& p3 = std::get<Model3Params>(codec);
            for (int u = 0; u < K; ++u) {
                xs[0][u] = model3_encode(p3, msgs[u], 1);
                xs[1][u] = model3_encode(p3, msgs[u], 2);
            }
        }
    }

    Outcome decode(int r, const std::vector<SlotOutputs>& outs, std::size_t want) const {
        if (const auto* p1 = std::get_if<Model1Params>(&codec)) {
            auto dec = model1_decode(*p1, outs[0].y[r]);
            switch (dec.status) {
                case Model1Status::NotDivisible: return Outcome::NotDivisible;
                case Model1Status::NoSolution: return Outcome::NoSolution;
                case Model1Status::Ambiguous: return Outcome::Ambiguous;
                case Model1Status::Ok: break;
            }
            return dec.msg == want ? Outcome::OkCorrect : Outcome::WrongMessage;
        }
        if (const auto* p2 = std::get_if<Model2Params>(&codec)) {
            auto dec = model2_decode(*p2, r + 1, static_cast<u64>(outs[0].y[r]),
                                     static_cast<u64>(outs[1].y[r]));
            if (!dec.ok) return Outcome::NotInImage;
            return dec.msg == want ? Outcome::OkCorrect : Outcome::WrongMessage;
        }
        const auto& p3 = std::get<Model3Params>(codec);
        auto dec = model3_decode(p3, static_cast<u64>(outs[0].y[r]),
                                 static_cast<u64>(outs[1].y[r]));
        switch (dec.outcome) {
            case Model3Outcome::MalformedT: return Outcome::MalformedT;
            case Model3Outcome::NonResidue: return Outcome::NonResidue;
            case Model3Outcome::NoCandidate: return Outcome::NoCandidate;
            case Model3Outcome::Ambiguous: return Outcome::Ambiguous;
            case Model3Outcome::Unique: break;
        }
        return dec.msg == want ? Outcome::OkCorrect : Outcome::WrongMessage;
    }

    // Model-specific per-pair oracle, computed from channel outputs and true
    // symbols only (never from decoder internals).
    bool explained(int r, const std::vector<std::vector<u64>>& xs,
                   const std::vector<SlotOutputs>& outs) const {
        if (const auto* p1 = std::get_if<Model1Params>(&codec)) {
            u64 yp = static_cast<u64>(static_cast<u128>(outs[0].y[r]) % p1->p_pow_d1);
            return yp % p1->p_pow_d != 0;
        }
        if (std::holds_alternative<Model3Params>(codec)) {
            u64 t_int = 2 * xs[0][r];
            for (int u = 0; u < K; ++u)
                if (u != r) t_int += xs[0][u];
            return t_int >= spec.q;
        }
        return false;
    }

    std::string detail(int r, const std::vector<SlotOutputs>& outs) const {
        if (const auto* p1 = std::get_if<Model1Params>(&codec)) {
            auto dec = model1_decode(*p1, outs[0].y[r]);
            return "y=" + to_string(outs[0].y[r]) + " y_prime=" + std::to_string(dec.y_prime) +
                   (dec.status == Model1Status::Ok ? " u=" + std::to_string(dec.u) : "");
        }
        if (const auto* p2 = std::get_if<Model2Params>(&codec)) {
            auto dec = model2_decode(*p2, r + 1, static_cast<u64>(outs[0].y[r]),
                                     static_cast<u64>(outs[1].y[r]));
            return "v=" + std::to_string(dec.v);
        }
        const auto& p3 = std::get<Model3Params>(codec);
        auto dec = model3_decode(p3, static_cast<u64>(outs[0].y[r]),
                                 static_cast<u64>(outs[1].y[r]));
        std::string s = "t_sum=" + std::to_string(dec.trace.t_sum);
        s += " l=" + std::to_string(dec.trace.l);
        s += " survivors={";
        for (std::size_t i = 0; i < dec.trace.survivors.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(dec.trace.survivors[i]);
        }
        s += "}";
        return s;
    }
};

void tuple_messages(u64 index, std::size_t csize, int K, std::size_t* msgs) {
    u64 rem = index;
    for (int u = K - 1; u >= 0; --u) {
        msgs[u] = static_cast<std::size_t>(rem % csize);
        rem /= csize;
    }
}

} // namespace

VerificationReport verify_zero_error(const ChannelSpec& spec, const CodecParams& codec,
                                     const Scope& scope, int workers) {
    constexpr u64 kDecodeBudget = 10'000'000;
    Harness hz = Harness::make(spec, codec);

    u64 total;
    std::vector<std::size_t> sampled; // flattened message tuples for sampled scope
    if (scope.exhaustive) {
        u128 t = 1;
        for (int i = 0; i < hz.K; ++i) {
            t *= hz.csize;
            if (t * hz.K > kDecodeBudget)
                raise(Errc::BudgetExceeded, "verify: exhaustive scope exceeds 10^7 decode calls");
        }
        total = static_cast<u64>(t);
    } else {
        if (scope.samples * static_cast<u64>(hz.K) > kDecodeBudget)
            raise(Errc::BudgetExceeded, "verify: sampled scope exceeds 10^7 decode calls");
        total = scope.samples;
        sampled.resize(total * hz.K);
        std::mt19937_64 gen(scope.seed);
        for (auto& m : sampled) m = static_cast<std::size_t>(gen() % hz.csize);
    }

    const int K = hz.K;
    std::vector<u8> outcomes(total * K);
    std::vector<u8> explained(total * K);

    int nworkers = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    if (nworkers < 1) nworkers = 1;
    nworkers = static_cast<int>(std::min<u64>(nworkers, std::max<u64>(total, 1)));

    std::vector<std::vector<OracleMap>> worker_oracles(
        nworkers, std::vector<OracleMap>(K));

    auto run_range = [&](int w, u64 lo, u64 hi) {
        std::vector<std::size_t> msgs(K);
        std::vector<std::vector<u64>> xs;
        std::vector<SlotOutputs> outs(hz.slots);
        std::string key;
        for (u64 idx = lo; idx < hi; ++idx) {
            if (scope.exhaustive) tuple_messages(idx, hz.csize, K, msgs.data());
            else std::copy_n(&sampled[idx * K], K, msgs.begin());
            hz.encode(msgs.data(), xs);
            for (int s = 0; s < hz.slots; ++s) outs[s] = channel_outputs(spec, xs[s]);
            for (int r = 0; r < K; ++r) {
                outcomes[idx * K + r] = static_cast<u8>(hz.decode(r, outs, msgs[r]));
                explained[idx * K + r] = hz.explained(r, xs, outs) ? 1 : 0;
                key.clear();
                for (int s = 0; s < hz.slots; ++s) append_key(key, outs[s].y[r]);
                auto& entry = worker_oracles[w][r][key];
                entry.tuples += 1;
                entry.msgs.insert(msgs[r]);
            }
        }
    };

    if (nworkers == 1) {
        run_range(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        u64 chunk = (total + nworkers - 1) / nworkers;
        for (int w = 0; w < nworkers; ++w) {
            u64 lo = std::min<u64>(w * chunk, total);
            u64 hi = std::min<u64>(lo + chunk, total);
            pool.emplace_back(run_range, w, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // Merge the per-worker collision maps.
    std::vector<OracleMap> oracle(K);
    for (auto& wo : worker_oracles)
        for (int r = 0; r < K; ++r)
            for (auto& [key, entry] : wo[r]) {
                auto& dst = oracle[r][key];
                dst.tuples += entry.tuples;
                dst.msgs.insert(entry.msgs.begin(), entry.msgs.end());
            }

    VerificationReport rep;
    rep.model = hz.model;
    rep.K = K;
    rep.q = spec.q;
    rep.semantics = spec.semantics == Semantics::ModQ ? "mod_q" : "integer";
    rep.scope = scope.exhaustive ? "exhaustive" : "sampled";
    rep.samples = scope.exhaustive ? 0 : scope.samples;
    rep.seed = scope.exhaustive ? 0 : scope.seed;
    rep.total_tuples = total;
    rep.decodes = total * K;

    for (int r = 0; r < K; ++r)
        for (auto& [key, entry] : oracle[r])
            if (entry.msgs.size() >= 2) rep.oracle.collision_pairs += entry.tuples;

    // Second pass: tallies, exemplars, oracle agreement.
    rep.oracle_agreement = true;
    {
        std::vector<std::size_t> msgs(K);
        std::vector<std::vector<u64>> xs;
        std::vector<SlotOutputs> outs(hz.slots);
        std::string key;
        for (u64 idx = 0; idx < total; ++idx) {
            if (scope.exhaustive) tuple_messages(idx, hz.csize, K, msgs.data());
            else std::copy_n(&sampled[idx * K], K, msgs.begin());
            bool computed = false;
            for (int r = 0; r < K; ++r) {
                auto out = static_cast<Outcome>(outcomes[idx * K + r]);
                bool expl = explained[idx * K + r] != 0;
                if (expl) ++rep.oracle.explained_pairs;
                bool failing = out != Outcome::OkCorrect;
                bool need_key = failing || expl || rep.oracle.collision_pairs > 0;
                bool collided = false;
                if (need_key) {
                    if (!computed) {
                        hz.encode(msgs.data(), xs);
                        for (int s = 0; s < hz.slots; ++s) outs[s] = channel_outputs(spec, xs[s]);
                        computed = true;
                    }
                    key.clear();
                    for (int s = 0; s < hz.slots; ++s) append_key(key, outs[s].y[r]);
                    auto it = oracle[r].find(key);
                    collided = it != oracle[r].end() && it->second.msgs.size() >= 2;
                }
                if (collided || expl) ++rep.oracle.undecodable_pairs;
                switch (out) {
                    case Outcome::OkCorrect:
                        ++rep.decoded_ok;
                        break;
                    case Outcome::Ambiguous:
                        ++rep.ambiguous;
                        ++rep.error_breakdown[outcome_kind(out, hz.model)];
                        break;
                    default:
                        ++rep.failures;
                        ++rep.error_breakdown[outcome_kind(out, hz.model)];
                        break;
                }
                if (failing) {
                    if (!collided && !expl) rep.oracle_agreement = false;
                    if (rep.exemplars.size() < 10) {
                        Exemplar ex;
                        ex.tuple_index = idx;
                        ex.messages = msgs;
                        ex.symbols = xs[0];
                        ex.receiver = r + 1;
                        ex.kind = outcome_kind(out, hz.model);
                        ex.detail = hz.detail(r, outs);
                        rep.exemplars.push_back(std::move(ex));
                    }
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// DoF sweeps
// ---------------------------------------------------------------------------

RateRow make_rate_row(u64 q, int model, int K, int slots, u64 codebook_size) {
    RateRow row;
    row.q = q;
    row.model = model;
    row.K = K;
    row.slots = slots;
    row.codebook_size = codebook_size;
    row.per_user_rate_bits = std::log2(static_cast<double>(codebook_size)) / slots;
    row.sum_rate_bits = K * row.per_user_rate_bits;
    row.dof_ratio = row.sum_rate_bits / std::log2(static_cast<double>(q));
    if (row.dof_ratio > static_cast<double>(K) ||
        row.dof_ratio > K / 2.0 + 0.01) {
        raise(Errc::Internal, "rate row violates the DoF bound");
    }
    return row;
}

SweepEntry dof_sweep_model1(i64 a, u32 d, const MultiPoly& h, Model1Mode mode,
                            std::optional<u64> p_override) {
    SweepEntry e;
    try {
        auto params = model1_derive(a, d, h, mode, p_override);
        e.q = params.q;
        e.row = make_rate_row(params.q, 1, h.nvars(), 1, params.C.size());
        e.ok = true;
    } catch (const Error& err) {
        e.skip_reason = std::string(errc_name(err.code())) + ": " + err.what();
    }
    return e;
}

std::vector<SweepEntry> dof_sweep_model2(const MultiPoly& f, const MultiPoly& g, u64 t,
                                         int K, std::span<const u64> qs) {
    std::vector<SweepEntry> out;
    for (u64 q : qs) {
        SweepEntry e;
        e.q = q;
        try {
            auto params = model2_derive(f, g, t, q, K);
            e.row = make_rate_row(q, 2, K, 2, params.C.size());
            e.ok = true;
        } catch (const Error& err) {
            e.skip_reason = std::string(errc_name(err.code())) + ": " + err.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<SweepEntry> dof_sweep_model3(std::span<const u64> qs, Model3CodebookMode mode) {
    std::vector<SweepEntry> out;
    for (u64 q : qs) {
        SweepEntry e;
        e.q = q;
        try {
            auto params = model3_derive(q, mode);
            e.row = make_rate_row(q, 3, 3, 2, params.C.size());
            e.ok = true;
        } catch (const Error& err) {
            e.skip_reason = std::string(errc_name(err.code())) + ": " + err.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::string sweep_csv(std::span<const SweepEntry> entries) {
    std::string out = "q,model,slots,codebook_size,per_user_rate_bits,sum_rate_bits,dof_ratio\n";
    char line[256];
    for (const auto& e : entries) {
        if (!e.ok) continue;
        std::snprintf(line, sizeof(line), "%llu,%d,%d,%llu,%.6f,%.6f,%.6f\n",
                      static_cast<unsigned long long>(e.row.q), e.row.model, e.row.slots,
                      static_cast<unsigned long long>(e.row.codebook_size),
                      e.row.per_user_rate_bits, e.row.sum_rate_bits, e.row.dof_ratio);
        out += line;
    }
    return out;
}

} // namespace nldic
