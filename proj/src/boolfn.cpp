#include "bvls/boolfn.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <string>

namespace bvls {

std::string to_bitstring(Vec v, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 1; i <= n; ++i)
        if (v & var_mask(n, i)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

Vec parse_bitstring(std::string_view s, int n) {
    if (static_cast<int>(s.size()) != n)
        throw std::invalid_argument("bitstring '" + std::string(s) + "' must have " + std::to_string(n) +
                                    " characters");
    Vec v = 0;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bitstring '" + std::string(s) + "' contains a non-binary character");
        v = (v << 1) | Vec(c == '1');
    }
    return v;
}

void check_var_count(int n) {
    if (n < 1 || n > kMaxVars)
        throw std::invalid_argument("variable count " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxVars) + "]");
}

BooleanFunction::BooleanFunction(int n) : n_(n) {
    check_var_count(n);
    words_.assign(word_count(n), 0);
}

BooleanFunction BooleanFunction::from_bits(int n, std::span<const std::uint8_t> bits) {
    check_var_count(n);
    if (bits.size() != table_size(n))
        throw std::invalid_argument("truth table must have exactly 2^n entries");
    std::vector<std::uint64_t> words(word_count(n), 0);
    for (std::size_t x = 0; x < bits.size(); ++x) {
        if (bits[x] > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
        words[x >> 6] |= std::uint64_t{bits[x]} << (x & 63);
    }
    return BooleanFunction(n, std::move(words));
}

BooleanFunction BooleanFunction::from_words(int n, std::vector<std::uint64_t> words) {
    check_var_count(n);
    if (words.size() != word_count(n)) throw std::invalid_argument("word count does not match 2^n bits");
    if ((words.back() & ~valid_mask(n)) != 0)
        throw std::invalid_argument("bits set beyond the end of the truth table");
    return BooleanFunction(n, std::move(words));
}

bool BooleanFunction::at(Vec x) const {
    if (x >= size()) throw std::out_of_range("input index outside the truth table");
    return (*this)(x);
}

std::uint64_t BooleanFunction::weight() const noexcept {
    std::uint64_t w = 0;
    for (auto word : words_) w += static_cast<std::uint64_t>(std::popcount(word));
    return w;
}

BooleanFunction make_linear(int n, Vec a) {
    check_var_count(n);
    if (a >= table_size(n)) throw std::invalid_argument("vector has more than n bits");
    std::vector<std::uint64_t> words(BooleanFunction::word_count(n), 0);
    const std::uint64_t size = table_size(n);
    for (std::uint64_t x = 0; x < size; ++x)
        if (dot(a, static_cast<Vec>(x))) words[x >> 6] |= std::uint64_t{1} << (x & 63);
    return BooleanFunction::from_words(n, std::move(words));
}

BooleanFunction make_inner_product_bent(int n) {
    check_var_count(n);
    if (n % 2 != 0) throw std::invalid_argument("inner-product bent function needs an even variable count");
    const int half = n / 2;
    const Vec low = (Vec{1} << half) - 1;
    std::vector<std::uint64_t> words(BooleanFunction::word_count(n), 0);
    const std::uint64_t size = table_size(n);
    for (std::uint64_t x = 0; x < size; ++x) {
        // x_1..x_k occupy the high half, y_1..y_k the low half, in the same order.
        const Vec xs = static_cast<Vec>(x >> half);
        const Vec ys = static_cast<Vec>(x) & low;
        if (dot(xs, ys)) words[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
    return BooleanFunction::from_words(n, std::move(words));
}

BooleanFunction plant_structure(const BooleanFunction& g, bool i) {
    const int n = g.n() + 1;
    check_var_count(n);
    const std::uint64_t half = g.size();
    std::vector<std::uint64_t> words(BooleanFunction::word_count(n), 0);
    auto set = [&](std::uint64_t x) { words[x >> 6] |= std::uint64_t{1} << (x & 63); };
    for (std::uint64_t x = 0; x < half; ++x) {
        const bool gx = g(static_cast<Vec>(x));
        if (gx) set(x);              // x_1 = 0
        if (gx != i) set(half + x);  // x_1 = 1
    }
    return BooleanFunction::from_words(n, std::move(words));
}

BooleanFunction random_function(int n, std::uint64_t seed) {
    check_var_count(n);
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> words(BooleanFunction::word_count(n));
    for (auto& w : words) w = rng();
    words.back() &= BooleanFunction::valid_mask(n);
    return BooleanFunction::from_words(n, std::move(words));
}

}  // namespace bvls
