#pragma once

#include <cstdint>
#include <span>

#include "bvls/bits.hpp"
#include "bvls/boolfn.hpp"

// Data-parallel inner loops. Every parallel kernel has a serial counterpart
// that is kept as the reference the tests and benchmarks compare against.
// All arithmetic is integer, so the parallel results are bit-identical to the
// serial ones regardless of thread count.
namespace bvls::kernels {

/// In-place unnormalized Walsh-Hadamard butterfly; data.size() must be a power of two.
void fwht_serial(std::span<std::int32_t> data);
void fwht_serial(std::span<std::int64_t> data);

/// OpenMP version of fwht_serial. Stages with a stride below the block size
/// are run block-locally; wider stages are split across butterfly pairs.
void fwht_parallel(std::span<std::int32_t> data);
void fwht_parallel(std::span<std::int64_t> data);

/// out[x] = (-1)^f(x); out.size() must equal 2^n.
void sign_expand(const BooleanFunction& f, std::span<std::int32_t> out);

/// Number of x with f(x ^ a) != f(x), computed a word at a time.
std::uint64_t derivative_weight(const BooleanFunction& f, Vec a);

/// out[a] = derivative_weight(f, a) for every a, parallel over a.
void derivative_weights_all(const BooleanFunction& f, std::span<std::uint64_t> out);

/// Serial bit-by-bit version of derivative_weights_all.
void derivative_weights_all_serial(const BooleanFunction& f, std::span<std::uint64_t> out);

}  // namespace bvls::kernels
