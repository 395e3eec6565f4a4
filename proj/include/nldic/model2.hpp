#ifndef NLDIC_MODEL2_HPP
#define NLDIC_MODEL2_HPP

#include <unordered_map>

#include <nldic/codebook.hpp>

namespace nldic {

/// Two-slot repetition scheme for channels h = f(X1) + g(X2, ..., XK) where
/// the interference polynomial g vanishes identically once the distinguished
/// value t is substituted at any of its argument positions.
struct Model2Params {
    int K = 0;
    u64 q = 0;
    MultiPoly f;  // univariate in X1, K slots
    MultiPoly g;  // over X2..XK, K slots, no X1
    u64 t = 0;    // vanish point
    u64 f_at_t = 0;
    Codebook C;   // invertible set for f
    ImageTable table;
    std::unordered_map<u64, u64> finv; // f(x) -> x for x in C
};

/// Validates the vanishing condition (substituting t at every argument
/// position of g must give the zero function on Z_q) and builds the
/// invertible-set codebook.  A position where the condition fails throws
/// ConditionViolated with the position in detail_a.
Model2Params model2_derive(const MultiPoly& f, const MultiPoly& g, u64 t, u64 q, int K);

/// Slot 1: every user sends its codeword.  Slot 2: user 1 sends t, everyone
/// else repeats.
u64 model2_encode(const Model2Params& params, int user, std::size_t msg, int slot);

struct Model2Decode {
    bool ok = false; // false: v not in f(C) (NotInImage)
    std::size_t msg = 0;
    u64 v = 0;       // the f(X_i) value the decoder inverted
};

/// Receiver 1 cancels the interference across the two slots; receivers i != 1
/// read f(X_i) directly from slot 2.  Outputs must be mod-q residues.
Model2Decode model2_decode(const Model2Params& params, int receiver, u64 y1, u64 y2);

/// The channel polynomial h = f + g this scheme runs over.
MultiPoly model2_channel_poly(const Model2Params& params);

} // namespace nldic

#endif // NLDIC_MODEL2_HPP
