#include "bvls/quantum_sim.hpp"

#include <algorithm>
#include <stdexcept>

namespace bvls {

BvSampler::BvSampler(const WalshSpectrum& spectrum, std::uint64_t seed)
    : n_(spectrum.n()), cumulative_(spectrum.size()), rng_(seed) {
    std::uint64_t running = 0;
    const auto coeffs = spectrum.coeffs();
    for (std::size_t w = 0; w < coeffs.size(); ++w) {
        running += static_cast<std::uint64_t>(std::int64_t{coeffs[w]} * coeffs[w]);
        cumulative_[w] = running;
    }
    if (running != std::uint64_t{1} << (2 * n_))
        throw std::invalid_argument("BvSampler: squared coefficients do not sum to 2^(2n)");
}

Vec BvSampler::sample() {
    // 2^(2n) divides 2^64, so the top 2n bits are exactly uniform.
    const std::uint64_t u = rng_() >> (64 - 2 * n_);
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<Vec>(it - cumulative_.begin());
}

std::vector<Vec> BvSampler::sample_batch(std::size_t count) {
    if (count == 0) throw std::invalid_argument("sample_batch: count must be positive");
    std::vector<Vec> out(count);
    for (auto& w : out) w = sample();
    return out;
}

}  // namespace bvls
