#ifndef NLDIC_MODEL3_HPP
#define NLDIC_MODEL3_HPP

#include <nldic/codebook.hpp>

namespace nldic {

/// Paper keeps the codebook bound floor((q-12)/60); Strict shrinks it to
/// floor((q-36)/80), which forces 2*X_i + X_j + X_k < q for every codeword
/// tuple and so removes the wraparound failures the larger bound admits.
enum class Model3CodebookMode { Paper, Strict };

/// Eq22 completes the square around t/4; PaperLiteral reproduces the printed
/// 5m+1 center for comparison runs only.
enum class Model3CenterMode { Eq22, PaperLiteral };

struct Model3Params {
    u64 q = 0;
    Codebook C; // arithmetic progression 20n + 4
    Model3CodebookMode codebook_mode = Model3CodebookMode::Paper;
    Model3CenterMode center_mode = Model3CenterMode::Eq22;
};

/// K = 3 product channel Y_i = X_i (X_j + X_k).  Requires prime q > 5 with
/// q ≡ 3 (mod 5); anything else throws CongruenceViolated.
Model3Params model3_derive(u64 q, Model3CodebookMode mode);

/// Slot 1 sends the codeword, slot 2 sends codeword + 1.
u64 model3_encode(const Model3Params& params, std::size_t msg, int slot);

enum class Model3Outcome { Unique, Ambiguous, MalformedT, NonResidue, NoCandidate };

struct Model3Trace {
    u64 t_sum = 0;   // 2*X_i + alpha recovered from the two outputs
    u64 m = 0;       // (t_sum - 16) / 20 when well formed
    u64 center = 0;  // completed-square center
    u64 rhs = 0;     // right-hand side of the completed square
    u64 l = 0;       // chosen square root (smaller of the pair)
    i64 alpha = -1;  // interferer sum implied by a unique survivor
    std::vector<u64> candidates; // in-range integers from the +/- branches
    std::vector<u64> survivors;  // candidates that lie in C, ascending
};

struct Model3Decode {
    Model3Outcome outcome = Model3Outcome::NoCandidate;
    std::size_t msg = 0; // valid for Unique
    Model3Trace trace;
};

Model3Decode model3_decode(const Model3Params& params, u64 y1, u64 y2);

/// The K = 3 channel polynomial X1*X2 + X1*X3.
MultiPoly model3_channel_poly();

} // namespace nldic

#endif // NLDIC_MODEL3_HPP
