#ifndef NLDIC_CHANNEL_HPP
#define NLDIC_CHANNEL_HPP

#include <span>
#include <vector>

#include <nldic/polynomial.hpp>

namespace nldic {

/// Symmetric K-user deterministic channel: every receiver applies the same
/// polynomial h to a circular rotation of the transmitted symbols.
struct ChannelSpec {
    int K = 0;
    MultiPoly h;
    u64 q = 0;
    Semantics semantics = Semantics::ModQ;

    void validate() const;
};

/// Receiver i's argument order: (i, i+1, ..., i+K-1) with indices wrapped
/// back into 1..K.
std::vector<int> receiver_arguments(int i, int K);

struct SlotOutputs {
    std::vector<i128> y; // y[i-1] = receiver i's output
};

/// One channel use: all K receiver outputs for the given transmit vector.
/// ModQ inputs must lie in [0, q); violations are rejected here, not inside
/// evaluation.
SlotOutputs channel_outputs(const ChannelSpec& spec, std::span<const u64> x);

} // namespace nldic

#endif // NLDIC_CHANNEL_HPP
