#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gbp {

// 128-bit unsigned counter used for exact solution counts. All arithmetic on
// counts goes through the checked helpers; overflow raises std::overflow_error
// instead of wrapping.
using u128 = unsigned __int128;

inline constexpr u128 u128_max() { return ~u128{0}; }

inline u128 checked_add(u128 a, u128 b) {
    u128 s = a + b;
    if (s < a) throw std::overflow_error("count overflow: 128-bit addition wrapped");
    return s;
}

inline u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > u128_max() / a)
        throw std::overflow_error("count overflow: 128-bit multiplication wrapped");
    return a * b;
}

inline u128 checked_pow_u128(std::uint64_t base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return s;
}

}  // namespace gbp
