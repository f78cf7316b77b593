#include "bvls/kernels.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <omp.h>

namespace bvls::kernels {

namespace {

// Below this many elements the OpenMP fork costs more than the work.
constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 14;
// Stages with stride < kBlock stay inside one cache-resident block.
constexpr std::size_t kBlock = std::size_t{1} << 12;

template <class T>
void check_pow2(std::span<T> data) {
    if (data.empty() || !std::has_single_bit(data.size()))
        throw std::invalid_argument("Walsh-Hadamard transform needs a power-of-two length");
}

template <class T>
inline void butterfly(T* d, std::size_t i0, std::size_t h) {
    const T a = d[i0];
    const T b = d[i0 + h];
    d[i0] = a + b;
    d[i0 + h] = a - b;
}

template <class T>
void block_stages(T* d, std::size_t len) {
    for (std::size_t h = 1; h < len; h <<= 1)
        for (std::size_t base = 0; base < len; base += 2 * h)
            for (std::size_t j = base; j < base + h; ++j) butterfly(d, j, h);
}

template <class T>
void fwht_serial_impl(std::span<T> data) {
    check_pow2(data);
    block_stages(data.data(), data.size());
}

template <class T>
void fwht_parallel_impl(std::span<T> data) {
    check_pow2(data);
    const std::size_t size = data.size();
    T* d = data.data();
    const bool go_parallel = static_cast<std::int64_t>(size) >= kParallelThreshold;
    const std::size_t block = std::min(size, kBlock);
    const auto blocks = static_cast<std::int64_t>(size / block);

#pragma omp parallel for schedule(static) if (go_parallel)
    for (std::int64_t b = 0; b < blocks; ++b) block_stages(d + static_cast<std::size_t>(b) * block, block);

    const auto pairs = static_cast<std::int64_t>(size / 2);
    for (std::size_t h = block; h < size; h <<= 1) {
        const std::size_t low = h - 1;
#pragma omp parallel for schedule(static) if (go_parallel)
        for (std::int64_t p = 0; p < pairs; ++p) {
            const auto i = static_cast<std::size_t>(p);
            butterfly(d, ((i & ~low) << 1) | (i & low), h);
        }
    }
}

constexpr std::uint64_t kSwapMasks[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

// Bit p of the result is bit (p ^ c) of w, for c < 64.
inline std::uint64_t xor_permute(std::uint64_t w, unsigned c) {
    for (unsigned s = 0; s < 6; ++s) {
        if ((c >> s) & 1u) {
            const unsigned shift = 1u << s;
            w = ((w & kSwapMasks[s]) << shift) | ((w >> shift) & kSwapMasks[s]);
        }
    }
    return w;
}

}  // namespace

void fwht_serial(std::span<std::int32_t> data) { fwht_serial_impl(data); }
void fwht_serial(std::span<std::int64_t> data) { fwht_serial_impl(data); }
void fwht_parallel(std::span<std::int32_t> data) { fwht_parallel_impl(data); }
void fwht_parallel(std::span<std::int64_t> data) { fwht_parallel_impl(data); }

void sign_expand(const BooleanFunction& f, std::span<std::int32_t> out) {
    if (out.size() != f.size()) throw std::invalid_argument("sign_expand: output size must be 2^n");
    const auto words = f.words();
    const auto word_total = static_cast<std::int64_t>(words.size());
    const std::size_t per_word = std::min<std::size_t>(64, out.size());
#pragma omp parallel for schedule(static) if (word_total >= 256)
    for (std::int64_t k = 0; k < word_total; ++k) {
        const std::uint64_t w = words[static_cast<std::size_t>(k)];
        std::int32_t* dst = out.data() + static_cast<std::size_t>(k) * 64;
        for (std::size_t b = 0; b < per_word; ++b) dst[b] = 1 - 2 * static_cast<std::int32_t>((w >> b) & 1);
    }
}

std::uint64_t derivative_weight(const BooleanFunction& f, Vec a) {
    const auto words = f.words();
    const std::size_t hi = a >> 6;
    const unsigned lo = a & 63u;
    std::uint64_t weight = 0;
    for (std::size_t k = 0; k < words.size(); ++k)
        weight += static_cast<std::uint64_t>(std::popcount(words[k] ^ xor_permute(words[k ^ hi], lo)));
    return weight;
}

void derivative_weights_all(const BooleanFunction& f, std::span<std::uint64_t> out) {
    if (out.size() != f.size()) throw std::invalid_argument("derivative_weights_all: output size must be 2^n");
    const auto total = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static) if (total >= 1024)
    for (std::int64_t a = 0; a < total; ++a) out[static_cast<std::size_t>(a)] = derivative_weight(f, static_cast<Vec>(a));
}

void derivative_weights_all_serial(const BooleanFunction& f, std::span<std::uint64_t> out) {
    if (out.size() != f.size()) throw std::invalid_argument("derivative_weights_all_serial: output size must be 2^n");
    const std::uint64_t size = f.size();
    for (std::uint64_t a = 0; a < size; ++a) {
        std::uint64_t weight = 0;
        for (std::uint64_t x = 0; x < size; ++x)
            weight += f(static_cast<Vec>(x)) != f(static_cast<Vec>(x ^ a));
        out[a] = weight;
    }
}

}  // namespace bvls::kernels
