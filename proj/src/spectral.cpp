#include "bvls/spectral.hpp"

#include <stdexcept>
#include <string>

#include "bvls/kernels.hpp"

namespace bvls {

WalshSpectrum::WalshSpectrum(int n, std::vector<std::int32_t> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    check_var_count(n);
    if (coeffs_.size() != table_size(n)) throw std::invalid_argument("Walsh spectrum must have 2^n coefficients");
    if (energy() != std::int64_t{1} << (2 * n))
        throw std::invalid_argument("Walsh spectrum violates Parseval: energy " + std::to_string(energy()) +
                                    " != 2^(2n)");
}

std::int64_t WalshSpectrum::energy() const noexcept {
    std::int64_t sum = 0;
    for (std::int64_t c : coeffs_) sum += c * c;
    return sum;
}

namespace {

template <class Kernel>
WalshSpectrum transform_with(const BooleanFunction& f, Kernel kernel) {
    std::vector<std::int32_t> coeffs(f.size());
    kernels::sign_expand(f, coeffs);
    kernel(std::span<std::int32_t>(coeffs));
    return WalshSpectrum(f.n(), std::move(coeffs));
}

}  // namespace

WalshSpectrum walsh_transform(const BooleanFunction& f) {
    return transform_with(f, [](std::span<std::int32_t> d) { kernels::fwht_parallel(d); });
}

WalshSpectrum walsh_transform_serial(const BooleanFunction& f) {
    return transform_with(f, [](std::span<std::int32_t> d) { kernels::fwht_serial(d); });
}

std::int64_t walsh_value_naive(const BooleanFunction& f, Vec w) {
    std::int64_t sum = 0;
    const std::uint64_t size = f.size();
    for (std::uint64_t x = 0; x < size; ++x) sum += (f(static_cast<Vec>(x)) != dot(w, static_cast<Vec>(x))) ? -1 : 1;
    return sum;
}

std::int64_t correlation(const BooleanFunction& f, Vec a) {
    std::int64_t sum = 0;
    const std::uint64_t size = f.size();
    for (std::uint64_t x = 0; x < size; ++x)
        sum += (f(static_cast<Vec>(x)) != f(static_cast<Vec>(x ^ a))) ? -1 : 1;
    return sum;
}

DerivativeCounts derivative_counts(const BooleanFunction& f, Vec a) {
    const std::uint64_t ones = kernels::derivative_weight(f, a);
    return {f.size() - ones, ones};
}

std::vector<std::int64_t> autocorrelation_from_spectrum(const WalshSpectrum& spectrum) {
    // Every partial sum is bounded by the total energy 2^(2n) <= 2^48.
    std::vector<std::int64_t> sq(spectrum.size());
    const auto coeffs = spectrum.coeffs();
    for (std::size_t w = 0; w < sq.size(); ++w) sq[w] = std::int64_t{coeffs[w]} * coeffs[w];
    kernels::fwht_parallel(std::span<std::int64_t>(sq));
    return sq;
}

DifferentialProfile::DifferentialProfile(int n, std::vector<std::uint64_t> count0)
    : n_(n), count0_(std::move(count0)) {
    check_var_count(n);
    if (count0_.size() != table_size(n)) throw std::invalid_argument("differential profile needs 2^n entries");
    const std::uint64_t size = table_size(n);
    for (std::uint64_t a = 1; a < size; ++a) {
        const DerivativeCounts c = counts(static_cast<Vec>(a));
        for (bool i : {false, true}) {
            if (c[i] > max_count_) {
                max_count_ = c[i];
                witness_ = {static_cast<Vec>(a), i};
            }
        }
    }
}

DifferentialProfile differential_profile(const BooleanFunction& f, const WalshSpectrum& spectrum) {
    const int n = f.n();
    const std::vector<std::int64_t> scaled = autocorrelation_from_spectrum(spectrum);
    // scaled[a] = 2^n C_f(a), and count0 - count1 = C_f(a), count0 + count1 = 2^n.
    std::vector<std::uint64_t> count0(scaled.size());
    const auto size = static_cast<std::int64_t>(table_size(n));
    for (std::size_t a = 0; a < scaled.size(); ++a) count0[a] = static_cast<std::uint64_t>((size + (scaled[a] >> n)) / 2);
    return DifferentialProfile(n, std::move(count0));
}

DifferentialProfile differential_profile(const BooleanFunction& f) {
    return differential_profile(f, walsh_transform(f));
}

DifferentialProfile differential_profile_naive(const BooleanFunction& f) {
    if (f.n() > 12) throw std::invalid_argument("differential_profile_naive is limited to n <= 12");
    std::vector<std::uint64_t> ones(f.size());
    kernels::derivative_weights_all(f, ones);
    for (auto& c : ones) c = f.size() - c;
    return DifferentialProfile(f.n(), std::move(ones));
}

Theorem1Sides theorem1_check(const BooleanFunction& f, const WalshSpectrum& spectrum, Vec a, bool i) {
    std::int64_t spectral = 0;
    const auto coeffs = spectrum.coeffs();
    for (std::size_t w = 0; w < coeffs.size(); ++w)
        if (dot(static_cast<Vec>(w), a) == i) spectral += std::int64_t{coeffs[w]} * coeffs[w];
    const auto count = static_cast<std::int64_t>(derivative_counts(f, a)[i]);
    return {spectral, count << f.n()};
}

Theorem1Sides theorem1_check(const BooleanFunction& f, Vec a, bool i) {
    return theorem1_check(f, walsh_transform(f), a, i);
}

}  // namespace bvls
