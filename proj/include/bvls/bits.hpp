#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace bvls {

/// A vector of F_2^n packed into an integer. Variable x_1 is the most
/// significant of the n used bits, so the bitstring "101" for n = 3 is 0b101.
using Vec = std::uint32_t;

inline constexpr int kMaxVars = 24;

inline constexpr bool dot(Vec a, Vec b) noexcept {
    return (std::popcount(a & b) & 1) != 0;
}

inline constexpr std::uint64_t table_size(int n) noexcept {
    return std::uint64_t{1} << n;
}

/// Bit mask of variable x_i (1-based) in an n-variable vector.
inline constexpr Vec var_mask(int n, int i) noexcept {
    return Vec{1} << (n - i);
}

std::string to_bitstring(Vec v, int n);

/// Parses a bitstring of exactly n characters, x_1 first.
/// Throws std::invalid_argument on bad length or characters.
Vec parse_bitstring(std::string_view s, int n);

}  // namespace bvls
