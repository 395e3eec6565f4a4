#include <nldic/json_io.hpp>

#include <map>

namespace nldic {

Json params_json(const Model1Params& p) {
    Json j;
    j["model"] = 1;
    j["mode"] = p.mode == Model1Mode::PaperLiteral ? "paper-literal" : "repaired";
    j["a"] = p.a;
    j["d"] = p.d;
    j["two_adic_exp"] = p.two_adic_exp;
    j["d0"] = p.d0;
    j["c"] = p.c;
    j["p"] = p.p;
    j["q"] = p.q;
    j["e"] = p.e;
    j["codebook_size"] = p.C.size();
    j["C"] = p.C.symbols();
    return j;
}

Json params_json(const Model2Params& p) {
    Json j;
    j["model"] = 2;
    j["K"] = p.K;
    j["q"] = p.q;
    j["f"] = p.f.to_string();
    j["g"] = p.g.to_string();
    j["t"] = p.t;
    j["codebook_size"] = p.C.size();
    j["C"] = p.C.symbols();
    std::map<u64, u64> by_codeword; // x -> f(x), for stable output order
    for (const auto& [v, x] : p.finv) by_codeword[x] = v;
    Json finv = Json::object();
    for (u64 x : p.C.symbols()) finv[std::to_string(by_codeword[x])] = x;
    j["finv"] = finv;
    return j;
}

Json params_json(const Model3Params& p) {
    Json j;
    j["model"] = 3;
    j["q"] = p.q;
    j["codebook_mode"] = p.codebook_mode == Model3CodebookMode::Paper ? "paper" : "strict";
    j["codebook_size"] = p.C.size();
    j["C"] = p.C.symbols();
    return j;
}

Json report_json(const VerificationReport& r) {
    Json j;
    j["model"] = r.model;
    j["K"] = r.K;
    j["q"] = r.q;
    j["semantics"] = r.semantics;
    j["scope"] = r.scope;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["total_tuples"] = r.total_tuples;
    j["decodes"] = r.decodes;
    j["decoded_ok"] = r.decoded_ok;
    j["failures"] = r.failures;
    j["ambiguous"] = r.ambiguous;
    j["error_breakdown"] = Json::object();
    for (const auto& [kind, n] : r.error_breakdown) j["error_breakdown"][kind] = n;
    j["oracle"] = {
        {"collision_pairs", r.oracle.collision_pairs},
        {"explained_pairs", r.oracle.explained_pairs},
        {"undecodable_pairs", r.oracle.undecodable_pairs},
    };
    j["oracle_agreement"] = r.oracle_agreement;
    j["exemplars"] = Json::array();
    for (const auto& ex : r.exemplars) {
        j["exemplars"].push_back({
            {"tuple_index", ex.tuple_index},
            {"messages", ex.messages},
            {"symbols", ex.symbols},
            {"receiver", ex.receiver},
            {"kind", ex.kind},
            {"detail", ex.detail},
        });
    }
    return j;
}

Json bound_report_json(const BoundReport& r) {
    Json j;
    j["K"] = r.K;
    j["probe_q"] = r.probe_q;
    j["condition1_witnesses"] = r.condition1_witnesses;
    j["condition2"] = Json::array();
    for (const auto& c : r.condition2_results) {
        j["condition2"].push_back({
            {"j", c.j},
            {"holds", c.holds},
            {"violating_assignments", c.violating_assignments},
        });
    }
    j["implied_bound"] = r.implied_bound;
    return j;
}

Json channel_json(const ChannelSpec& spec) {
    Json j;
    j["K"] = spec.K;
    j["h"] = spec.h.to_string();
    j["q"] = spec.q;
    j["semantics"] = spec.semantics == Semantics::ModQ ? "mod_q" : "integer";
    return j;
}

ChannelSpec channel_from_json(const nlohmann::json& j) {
    ChannelSpec spec;
    if (!j.is_object()) raise(Errc::InvalidArgument, "channel config: expected a JSON object");
    for (const char* field : {"K", "h", "q", "semantics"})
        if (!j.contains(field))
            raise(Errc::InvalidArgument, std::string("channel config: missing field '") + field + "'");
    spec.K = j.at("K").get<int>();
    spec.q = j.at("q").get<u64>();
    spec.h = parse_poly(j.at("h").get<std::string>(), spec.K);
    std::string sem = j.at("semantics").get<std::string>();
    if (sem == "mod_q") spec.semantics = Semantics::ModQ;
    else if (sem == "integer") spec.semantics = Semantics::Integer;
    else raise(Errc::InvalidArgument, "channel config: semantics must be 'mod_q' or 'integer'");
    spec.validate();
    return spec;
}

Json error_json(const Error& err) {
    Json e;
    e["kind"] = errc_name(err.code());
    e["message"] = err.what();
    if (err.code() == Errc::InjectivityViolation)
        e["colliding_pair"] = {err.detail_a, err.detail_b};
    if (err.code() == Errc::SyntaxError) e["position"] = err.detail_a;
    if (err.code() == Errc::ConditionViolated) e["position"] = err.detail_a;
    Json j;
    j["error"] = e;
    return j;
}

} // namespace nldic
