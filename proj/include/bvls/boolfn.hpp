#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bvls/bits.hpp"

namespace bvls {

/// Bit-packed truth table of an n-variable Boolean function, 1 <= n <= 24.
///
/// Bit x of the table (word x / 64, bit x % 64) stores f(x). Unused high bits
/// of the last word are always zero. Instances are immutable once built.
class BooleanFunction {
public:
    /// Constant-zero function on n variables.
    explicit BooleanFunction(int n);

    /// Builds from one byte per input (0 or 1), index order.
    static BooleanFunction from_bits(int n, std::span<const std::uint8_t> bits);

    /// Builds from packed words; words.size() must equal word_count(n).
    static BooleanFunction from_words(int n, std::vector<std::uint64_t> words);

    int n() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return table_size(n_); }

    bool operator()(Vec x) const noexcept { return ((words_[x >> 6] >> (x & 63)) & 1) != 0; }
    bool at(Vec x) const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::uint64_t weight() const noexcept;

    friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

    static std::size_t word_count(int n) noexcept {
        return n >= 6 ? std::size_t{1} << (n - 6) : 1;
    }
    static std::uint64_t valid_mask(int n) noexcept {
        return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
    }

private:
    BooleanFunction(int n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {}

    int n_;
    std::vector<std::uint64_t> words_;
};

/// Throws std::invalid_argument unless 1 <= n <= kMaxVars.
void check_var_count(int n);

/// f(x) = a.x (mod 2).
BooleanFunction make_linear(int n, Vec a);

/// f(x_1..x_k, y_1..y_k) = sum x_i y_i with k = n/2; n must be even.
BooleanFunction make_inner_product_bent(int n);

/// f(x_1, ..., x_n) = g(x_2, ..., x_n) + i*x_1 on n = g.n() + 1 variables.
/// The vector (1,0,...,0) is then a linear structure with value i.
BooleanFunction plant_structure(const BooleanFunction& g, bool i);

/// Uniform random truth table drawn from std::mt19937_64 seeded with `seed`.
BooleanFunction random_function(int n, std::uint64_t seed);

/// The vector planted by plant_structure for an n-variable result.
inline constexpr Vec planted_vector(int n) noexcept { return var_mask(n, 1); }

}  // namespace bvls
