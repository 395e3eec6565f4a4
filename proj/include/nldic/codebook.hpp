#ifndef NLDIC_CODEBOOK_HPP
#define NLDIC_CODEBOOK_HPP

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include <nldic/polynomial.hpp>

namespace nldic {

/// Ordered transmit alphabet; the message index of a symbol is its rank.
class Codebook {
public:
    Codebook() = default;
    explicit Codebook(std::vector<u64> symbols); // must be strictly increasing

    std::size_t size() const { return symbols_.size(); }
    const std::vector<u64>& symbols() const { return symbols_; }

    u64 symbol(std::size_t msg) const; // throws IndexOutOfRange

    std::optional<std::size_t> index_of(u64 symbol) const;

private:
    std::vector<u64> symbols_;
    std::unordered_map<u64, std::size_t> index_;
};

/// Fibers of f over Z_q: fibers[v] is the sorted preimage set of v.
struct ImageTable {
    std::map<u64, std::vector<u64>> fibers;
};

struct InvertibleSet {
    Codebook codebook;
    ImageTable table;
};

/// Greedy invertible set for a univariate f over Z_q: one representative per
/// image value, the minimum of its fiber.  f restricted to the returned set
/// is injective and the set has |Im(f)| >= ceil(q / deg f) elements.
InvertibleSet invertible_set(const MultiPoly& f, u64 q);

} // namespace nldic

#endif // NLDIC_CODEBOOK_HPP
