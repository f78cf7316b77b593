#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bvls/bits.hpp"
#include "bvls/spectral.hpp"

namespace bvls {

/// Measurement-level simulation of the Bernstein-Vazirani circuit.
///
/// The pre-measurement state is sum_w S_f(w)|w>, so a run yields w with
/// probability coeff(w)^2 / 2^(2n). The sampler keeps the cumulative squared
/// coefficients and inverts a uniform integer in [0, 2^(2n)), which is exact:
/// no floating point enters the probability law.
///
/// The generator is std::mt19937_64 seeded with the caller's seed; each draw
/// consumes exactly one 64-bit output, of which the top 2n bits are used.
/// A sampler is a mutable stream: give each thread its own.
class BvSampler {
public:
    /// Throws std::invalid_argument if the spectrum's energy is not 2^(2n).
    BvSampler(const WalshSpectrum& spectrum, std::uint64_t seed);

    int n() const noexcept { return n_; }

    Vec sample();
    std::vector<Vec> sample_batch(std::size_t count);

    /// coeff(w)^2, recovered from the cumulative table.
    std::uint64_t weight(Vec w) const noexcept {
        return cumulative_[w] - (w == 0 ? 0 : cumulative_[w - 1]);
    }

private:
    int n_;
    std::vector<std::uint64_t> cumulative_;
    std::mt19937_64 rng_;
};

}  // namespace bvls
