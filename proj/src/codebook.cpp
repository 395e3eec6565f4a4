#include <nldic/codebook.hpp>

#include <algorithm>

#include <nldic/numtheory.hpp>

namespace nldic {

Codebook::Codebook(std::vector<u64> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i + 1 < symbols_.size(); ++i)
        if (symbols_[i] >= symbols_[i + 1])
            raise(Errc::InvalidArgument, "codebook symbols must be strictly increasing");
    index_.reserve(symbols_.size());
    for (std::size_t i = 0; i < symbols_.size(); ++i) index_.emplace(symbols_[i], i);
}

u64 Codebook::symbol(std::size_t msg) const {
    if (msg >= symbols_.size()) {
        raise(Errc::IndexOutOfRange,
              "message index " + std::to_string(msg) + " >= codebook size " +
                  std::to_string(symbols_.size()));
    }
    return symbols_[msg];
}

std::optional<std::size_t> Codebook::index_of(u64 symbol) const {
    auto it = index_.find(symbol);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

InvertibleSet invertible_set(const MultiPoly& f, u64 q) {
    if (!is_prime(q)) raise(Errc::InvalidArgument, "invertible_set: q must be prime");
    auto prof = f.degree_profile(); // throws ZeroPolynomial for f = 0
    for (int j = 1; j < f.nvars(); ++j)
        if (prof.per_variable[j] > 0)
            raise(Errc::InvalidArgument, "invertible_set: f must be univariate in X1");
    if (prof.per_variable[0] < 1)
        raise(Errc::InvalidArgument, "invertible_set: f must be nonconstant");

    InvertibleSet out;
    std::vector<u64> point(f.nvars(), 0);
    for (u64 x = 0; x < q; ++x) {
        point[0] = x;
        u64 v = eval_mod(f, point, q);
        out.table.fibers[v].push_back(x); // x ascending, so front() is the minimum
    }
    std::vector<u64> symbols;
    symbols.reserve(out.table.fibers.size());
    for (const auto& [v, fiber] : out.table.fibers) symbols.push_back(fiber.front());
    std::sort(symbols.begin(), symbols.end());
    out.codebook = Codebook(std::move(symbols));
    return out;
}

} // namespace nldic
