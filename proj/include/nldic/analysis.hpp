#ifndef NLDIC_ANALYSIS_HPP
#define NLDIC_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nldic/channel.hpp>
#include <nldic/model1.hpp>
#include <nldic/model2.hpp>
#include <nldic/model3.hpp>

namespace nldic {

// ---------------------------------------------------------------------------
// Upper-bound condition checking
// ---------------------------------------------------------------------------

struct Condition2Result {
    int j = 0;
    bool holds = false;            // no violating assignment at the probe prime
    u64 violating_assignments = 0; // assignments of {x_i} (i != j) with a bad pair
};

struct BoundReport {
    int K = 0;
    u64 probe_q = 0;
    std::vector<int> condition1_witnesses;        // j in 2..K with deg_{Xj}(h) = 1
    std::vector<Condition2Result> condition2_results;
    double implied_bound = 0.0;                   // K/2 if any condition holds, else K
};

/// Condition (1) is symbolic (degree exactly one); condition (2) is brute
/// force at the probe prime: whenever two values of X_j give receiver 1 the
/// same output, they must give receiver j the same output too.  Work is
/// bounded by probe_q^(K+1) <= 10^6, else BudgetExceeded.
BoundReport check_theorem1(const MultiPoly& h, int K, u64 probe_q);

// ---------------------------------------------------------------------------
// Zero-error verification harness
// ---------------------------------------------------------------------------

struct Scope {
    bool exhaustive = true;
    u64 samples = 0;
    u64 seed = 0;

    static Scope Exhaustive() { return {true, 0, 0}; }
    static Scope Sampled(u64 samples, u64 seed) { return {false, samples, seed}; }
};

using CodecParams = std::variant<Model1Params, Model2Params, Model3Params>;

struct Exemplar {
    u64 tuple_index = 0;
    std::vector<std::size_t> messages;
    std::vector<u64> symbols; // slot-1 symbols
    int receiver = 0;
    std::string kind;
    std::string detail;
};

struct OracleReport {
    u64 collision_pairs = 0;   // (tuple, receiver) pairs sharing outputs with a
                               // tuple that carries a different desired message
    u64 explained_pairs = 0;   // model-specific: p^d divisibility broken (Model I),
                               // integer 2*X_i + alpha >= q (Model III)
    u64 undecodable_pairs = 0; // union of the two
};

struct VerificationReport {
    int model = 0;
    int K = 0;
    u64 q = 0;
    std::string semantics;
    std::string scope;
    u64 samples = 0;
    u64 seed = 0;

    u64 total_tuples = 0;
    u64 decodes = 0; // total_tuples * K receivers
    u64 decoded_ok = 0;
    u64 failures = 0;
    u64 ambiguous = 0;
    std::map<std::string, u64> error_breakdown;
    std::vector<Exemplar> exemplars; // at most 10, smallest tuple first
    OracleReport oracle;
    bool oracle_agreement = false;
};

/// Runs encode -> channel -> decode for every codeword tuple (or a seeded
/// sample), tallies outcomes per receiver, and cross-checks the decoders
/// against the output-collision oracle.  Results are identical for any worker
/// count.  Exhaustive scopes above 10^7 decode calls throw BudgetExceeded.
VerificationReport verify_zero_error(const ChannelSpec& spec, const CodecParams& codec,
                                     const Scope& scope, int workers = 0);

// ---------------------------------------------------------------------------
// DoF sweeps
// ---------------------------------------------------------------------------

struct RateRow {
    u64 q = 0;
    int model = 0;
    int K = 0;
    int slots = 0;
    u64 codebook_size = 0;
    double per_user_rate_bits = 0.0; // log2(|C|) / slots
    double sum_rate_bits = 0.0;      // K * per_user_rate_bits
    double dof_ratio = 0.0;          // sum_rate_bits / log2(q)
};

struct SweepEntry {
    u64 q = 0;
    bool ok = false;
    RateRow row;
    std::string skip_reason;
};

RateRow make_rate_row(u64 q, int model, int K, int slots, u64 codebook_size);

SweepEntry dof_sweep_model1(i64 a, u32 d, const MultiPoly& h, Model1Mode mode,
                            std::optional<u64> p_override = std::nullopt);
std::vector<SweepEntry> dof_sweep_model2(const MultiPoly& f, const MultiPoly& g, u64 t,
                                         int K, std::span<const u64> qs);
std::vector<SweepEntry> dof_sweep_model3(std::span<const u64> qs, Model3CodebookMode mode);

/// CSV with the exact column contract
/// q,model,slots,codebook_size,per_user_rate_bits,sum_rate_bits,dof_ratio
/// (floats with 6 decimals); skipped entries are omitted.
std::string sweep_csv(std::span<const SweepEntry> entries);

} // namespace nldic

#endif // NLDIC_ANALYSIS_HPP
