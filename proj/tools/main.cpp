// Command-line front end: derive scheme parameters, verify zero-error
// decoding, run DoF sweeps, check upper-bound conditions, and parse channel
// polynomials.  Reports go to stdout (or --out); diagnostics go to stderr.
// Exit codes: 0 clean, 1 verification found failures/ambiguity, 2 bad
// configuration or derivation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <nldic/json_io.hpp>
#include <nldic/numtheory.hpp>

using namespace nldic;

namespace {

struct Options {
    int model = 0;
    std::string h_text;
    std::string f_text;
    std::string g_text;
    i64 a = 1;
    u32 d = 1;
    u64 t = 0;
    std::string q_text; // single prime, comma list, or "auto"
    u64 q_max = 0;
    std::optional<u64> p_override;
    int K = 0; // 0 = infer
    std::string mode = "paper-literal";
    std::string codebook = "paper";
    std::string semantics;
    bool exhaustive = false;
    std::optional<u64> samples;
    u64 seed = 0;
    int workers = 0;
    std::string out_path;
    std::string config_path;
    u64 probe = 5;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) raise(Errc::InvalidArgument, "cannot open output file " + opt.out_path);
    f << text;
}

void emit_json(const Options& opt, const Json& j) { emit(opt, j.dump(2) + "\n"); }

u64 parse_u64(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        u64 v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        raise(Errc::InvalidArgument, std::string("invalid ") + what + ": '" + s + "'");
    }
}

std::vector<u64> parse_q_list(const std::string& s) {
    std::vector<u64> qs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        qs.push_back(parse_u64(item, "q"));
    }
    return qs;
}

Model1Mode parse_mode(const std::string& s) {
    if (s == "paper-literal") return Model1Mode::PaperLiteral;
    if (s == "repaired") return Model1Mode::Repaired;
    raise(Errc::InvalidArgument, "mode must be 'paper-literal' or 'repaired'");
}

Model3CodebookMode parse_codebook(const std::string& s) {
    if (s == "paper") return Model3CodebookMode::Paper;
    if (s == "strict") return Model3CodebookMode::Strict;
    raise(Errc::InvalidArgument, "codebook must be 'paper' or 'strict'");
}

Semantics parse_semantics(const std::string& s) {
    if (s == "mod_q") return Semantics::ModQ;
    if (s == "integer") return Semantics::Integer;
    raise(Errc::InvalidArgument, "semantics must be 'mod_q' or 'integer'");
}

std::optional<nlohmann::json> load_config(const Options& opt) {
    if (opt.config_path.empty()) return std::nullopt;
    std::ifstream f(opt.config_path);
    if (!f) raise(Errc::InvalidArgument, "cannot open config file " + opt.config_path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        raise(Errc::InvalidArgument, std::string("config parse error: ") + e.what());
    }
    return j;
}

// Fills h/q/semantics from a channel config file where flags did not set them.
void merge_config(Options& opt) {
    auto cfg = load_config(opt);
    if (!cfg) return;
    ChannelSpec spec = channel_from_json(*cfg);
    if (opt.h_text.empty()) opt.h_text = spec.h.to_string();
    if (opt.K == 0) opt.K = spec.K;
    if (opt.q_text.empty()) opt.q_text = std::to_string(spec.q);
    if (opt.semantics.empty())
        opt.semantics = spec.semantics == Semantics::ModQ ? "mod_q" : "integer";
}

void require_prime(u64 q) {
    if (!is_prime(q))
        raise(Errc::InvalidArgument, std::to_string(q) + " is not prime; the constructions need a prime field");
}

MultiPoly parse_with_k(const std::string& text, int& K, const char* what) {
    if (text.empty()) raise(Errc::InvalidArgument, std::string("missing --") + what);
    if (K > 0) return parse_poly(text, K);
    return parse_poly_infer(text, K);
}

// --- derive ---------------------------------------------------------------

CodecParams derive_codec(Options& opt, int& K_out) {
    switch (opt.model) {
        case 1: {
            int K = opt.K;
            MultiPoly h = parse_with_k(opt.h_text, K, "h");
            std::optional<u64> q_override;
            if (!opt.q_text.empty() && opt.q_text != "auto")
                q_override = parse_u64(opt.q_text, "q");
            K_out = K;
            return model1_derive(opt.a, opt.d, h, parse_mode(opt.mode), opt.p_override,
                                 q_override);
        }
        case 2: {
            int K = opt.K;
            if (opt.g_text.empty()) raise(Errc::InvalidArgument, "missing --g");
            MultiPoly g = parse_with_k(opt.g_text, K, "g");
            if (opt.f_text.empty()) raise(Errc::InvalidArgument, "missing --f");
            MultiPoly f = parse_poly(opt.f_text, K);
            if (opt.q_text.empty()) raise(Errc::InvalidArgument, "missing --q");
            u64 q = parse_u64(opt.q_text, "q");
            require_prime(q);
            K_out = K;
            return model2_derive(f, g, opt.t, q, K);
        }
        case 3: {
            if (opt.q_text.empty()) raise(Errc::InvalidArgument, "missing --q");
            u64 q = parse_u64(opt.q_text, "q");
            require_prime(q);
            K_out = 3;
            return model3_derive(q, parse_codebook(opt.codebook));
        }
        default:
            raise(Errc::InvalidArgument, "--model must be 1, 2 or 3");
    }
}

int run_derive(Options& opt) {
    merge_config(opt);
    int K = 0;
    CodecParams codec = derive_codec(opt, K);
    std::visit([&](const auto& p) { emit_json(opt, params_json(p)); }, codec);
    return 0;
}

// --- verify ----------------------------------------------------------------

int run_verify(Options& opt) {
    merge_config(opt);
    if (opt.exhaustive == opt.samples.has_value())
        raise(Errc::InvalidArgument, "choose exactly one of --exhaustive or --samples N");

    int K = 0;
    CodecParams codec = derive_codec(opt, K);

    ChannelSpec spec;
    spec.K = K;
    if (opt.model == 1) {
        spec.h = parse_poly(opt.h_text, K);
        spec.q = std::get<Model1Params>(codec).q;
        if (opt.semantics.empty())
            raise(Errc::InvalidArgument, "model 1 verification needs --semantics mod_q|integer");
        spec.semantics = parse_semantics(opt.semantics);
    } else {
        if (!opt.semantics.empty() && parse_semantics(opt.semantics) != Semantics::ModQ)
            raise(Errc::InvalidArgument, "models 2 and 3 run under mod_q semantics");
        spec.semantics = Semantics::ModQ;
        if (opt.model == 2) {
            const auto& p = std::get<Model2Params>(codec);
            spec.h = model2_channel_poly(p);
            spec.q = p.q;
        } else {
            spec.h = model3_channel_poly();
            spec.q = std::get<Model3Params>(codec).q;
        }
    }

    Scope scope = opt.exhaustive ? Scope::Exhaustive() : Scope::Sampled(*opt.samples, opt.seed);
    VerificationReport rep = verify_zero_error(spec, codec, scope, opt.workers);
    emit_json(opt, report_json(rep));
    return rep.failures + rep.ambiguous > 0 ? 1 : 0;
}

// --- sweep -----------------------------------------------------------------

int run_sweep(Options& opt) {
    merge_config(opt);
    std::vector<SweepEntry> entries;
    if (opt.model == 1) {
        int K = opt.K;
        MultiPoly h = parse_with_k(opt.h_text, K, "h");
        if (!opt.q_text.empty() && opt.q_text != "auto")
            raise(Errc::InvalidArgument, "model 1 sweeps derive q; use --q auto (or omit --q)");
        entries.push_back(
            dof_sweep_model1(opt.a, opt.d, h, parse_mode(opt.mode), opt.p_override));
    } else {
        std::vector<u64> qs;
        if (!opt.q_text.empty() && opt.q_text != "auto") {
            qs = parse_q_list(opt.q_text);
            for (u64 q : qs) require_prime(q);
        } else if (opt.q_max > 0) {
            for (u64 q = 2; q <= opt.q_max; ++q) {
                if (!is_prime(q)) continue;
                if (opt.model == 3 && (q <= 5 || q % 5 != 3)) continue;
                qs.push_back(q);
            }
        }
        if (qs.empty())
            raise(Errc::InvalidArgument, "no admissible q values; pass --q or --q-max");
        if (opt.model == 2) {
            int K = opt.K;
            if (opt.g_text.empty()) {
                if (K == 0) K = 3;
                std::string g = "X2";
                for (int j = 3; j <= K; ++j) g += "*X" + std::to_string(j);
                opt.g_text = g;
            }
            MultiPoly g = parse_with_k(opt.g_text, K, "g");
            if (opt.f_text.empty()) raise(Errc::InvalidArgument, "missing --f");
            MultiPoly f = parse_poly(opt.f_text, K);
            entries = dof_sweep_model2(f, g, opt.t, K, qs);
        } else {
            entries = dof_sweep_model3(qs, parse_codebook(opt.codebook));
        }
    }
    for (const auto& e : entries)
        if (!e.ok)
            std::cerr << "skipped q=" << e.q << ": " << e.skip_reason << "\n";
    emit(opt, sweep_csv(entries));
    return 0;
}

// --- check-bounds / parse ---------------------------------------------------

int run_check_bounds(Options& opt) {
    merge_config(opt);
    int K = opt.K;
    MultiPoly h = parse_with_k(opt.h_text, K, "h");
    require_prime(opt.probe);
    BoundReport rep = check_theorem1(h, K, opt.probe);
    emit_json(opt, bound_report_json(rep));
    return 0;
}

int run_parse(Options& opt) {
    int K = opt.K;
    MultiPoly poly = parse_with_k(opt.h_text, K, "h");
    Json j;
    j["K"] = K;
    j["canonical"] = poly.to_string();
    j["terms"] = poly.terms().size();
    if (!poly.is_zero()) {
        auto prof = poly.degree_profile();
        j["per_variable_degrees"] = prof.per_variable;
        j["total_degree"] = prof.total_degree;
        j["min_total_degree"] = prof.min_total_degree;
    }
    emit_json(opt, j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interference-alignment codecs for symmetric polynomial deterministic channels"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help"); // frees -h for the --h polynomial flag

    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--model", opt.model, "scheme: 1, 2 or 3");
        sub->add_option("--h", opt.h_text, "channel polynomial (model 1 / bounds / parse)");
        sub->add_option("--f", opt.f_text, "desired-signal polynomial f(X1) (model 2)");
        sub->add_option("--g", opt.g_text, "interference polynomial over X2..XK (model 2)");
        sub->add_option("--a", opt.a, "leading coefficient of a*X1^d (model 1)");
        sub->add_option("--d", opt.d, "exponent of a*X1^d (model 1)");
        sub->add_option("--t", opt.t, "vanish point (model 2)");
        sub->add_option("--q", opt.q_text, "field prime; comma list for sweeps; 'auto' for model 1");
        sub->add_option("--q-max", opt.q_max, "sweep all admissible primes up to this bound");
        sub->add_option("--p", opt.p_override, "explicit inner prime (model 1)");
        sub->add_option("--K", opt.K, "number of users (default: inferred from the polynomials)");
        sub->add_option("--mode", opt.mode, "model 1 prime search: paper-literal | repaired");
        sub->add_option("--codebook", opt.codebook, "model 3 codebook bound: paper | strict");
        sub->add_option("--semantics", opt.semantics, "channel arithmetic: mod_q | integer");
        sub->add_option("--workers", opt.workers, "worker threads (default: machine parallelism)");
        sub->add_option("--out", opt.out_path, "write the report/CSV to this file");
        sub->add_option("--config", opt.config_path, "channel config JSON (K, h, q, semantics)");
    };

    CLI::App* c_derive = app.add_subcommand("derive", "derive scheme parameters, print JSON");
    add_common(c_derive);
    CLI::App* c_verify = app.add_subcommand("verify", "zero-error verification report (JSON)");
    add_common(c_verify);
    c_verify->add_flag("--exhaustive", opt.exhaustive, "enumerate every codeword tuple");
    c_verify->add_option("--samples", opt.samples, "verify N seeded random tuples");
    c_verify->add_option("--seed", opt.seed, "sampling seed (default 0)");
    CLI::App* c_sweep = app.add_subcommand("sweep", "DoF-ratio sweep (CSV)");
    add_common(c_sweep);
    CLI::App* c_bounds = app.add_subcommand("check-bounds", "upper-bound condition report (JSON)");
    add_common(c_bounds);
    c_bounds->add_option("--probe", opt.probe, "probe prime for condition (2) (default 5)");
    CLI::App* c_parse = app.add_subcommand("parse", "parse a polynomial, print canonical form");
    add_common(c_parse);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (c_derive->parsed()) return run_derive(opt);
        if (c_verify->parsed()) return run_verify(opt);
        if (c_sweep->parsed()) return run_sweep(opt);
        if (c_bounds->parsed()) return run_check_bounds(opt);
        if (c_parse->parsed()) return run_parse(opt);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const Error& err) {
        std::cout << error_json(err).dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        Error err(Errc::Internal, e.what());
        std::cout << error_json(err).dump(2) << "\n";
        return 2;
    }
}
