#ifndef NLDIC_COMMON_HPP
#define NLDIC_COMMON_HPP

#include <cstdint>
#include <string>

namespace nldic {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Arithmetic semantics of a channel evaluation: reduced into Z_q, or the
// exact integer value (no reduction).
enum class Semantics { ModQ, Integer };

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::string s;
    while (m > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

} // namespace nldic

#endif // NLDIC_COMMON_HPP
