#include <nldic/channel.hpp>

#include <nldic/numtheory.hpp>

namespace nldic {

void ChannelSpec::validate() const {
    if (K < 2) raise(Errc::InvalidArgument, "channel: K must be >= 2");
    if (h.is_zero()) raise(Errc::InvalidArgument, "channel: h must be nonzero");
    if (h.nvars() != K) raise(Errc::InvalidArgument, "channel: h must have exactly K variables");
    if (!is_prime(q)) raise(Errc::InvalidArgument, "channel: q must be prime");
}

std::vector<int> receiver_arguments(int i, int K) {
    if (i < 1 || i > K) raise(Errc::InvalidArgument, "receiver_arguments: user index out of range");
    std::vector<int> args(K);
    for (int s = 0; s < K; ++s) args[s] = (i - 1 + s) % K + 1;
    return args;
}

SlotOutputs channel_outputs(const ChannelSpec& spec, std::span<const u64> x) {
    if (x.size() != static_cast<std::size_t>(spec.K))
        raise(Errc::InvalidArgument, "channel_outputs: input vector length mismatch");
    if (spec.semantics == Semantics::ModQ) {
        for (u64 v : x)
            if (v >= spec.q)
                raise(Errc::InvalidArgument, "channel_outputs: input out of [0, q)");
    }
    SlotOutputs out;
    out.y.resize(spec.K);
    std::vector<u64> point(spec.K);
    for (int i = 1; i <= spec.K; ++i) {
        auto args = receiver_arguments(i, spec.K);
        for (int s = 0; s < spec.K; ++s) point[s] = x[args[s] - 1];
        out.y[i - 1] = eval_poly(spec.h, point, spec.semantics, spec.q);
    }
    return out;
}

} // namespace nldic
