#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bvls/bits.hpp"
#include "bvls/boolfn.hpp"
#include "bvls/rational.hpp"

namespace bvls {

/// Integer-scaled Walsh spectrum: coeff(w) = sum_x (-1)^(f(x) + w.x) = 2^n * S_f(w).
class WalshSpectrum {
public:
    /// Validates the size (2^n) and the integer Parseval identity;
    /// throws std::invalid_argument on violation.
    WalshSpectrum(int n, std::vector<std::int32_t> coeffs);

    int n() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return coeffs_.size(); }
    std::int32_t operator[](Vec w) const noexcept { return coeffs_[w]; }
    std::span<const std::int32_t> coeffs() const noexcept { return coeffs_; }

    /// S_f(w) as an exact fraction.
    Rational normalized(Vec w) const { return Rational(coeffs_[w], std::int64_t{1} << n_); }

    /// Sum of squared coefficients; equals 2^(2n) for any valid spectrum.
    std::int64_t energy() const noexcept;

    friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;

private:
    int n_;
    std::vector<std::int32_t> coeffs_;
};

/// Fast transform (parallel kernel), O(n 2^n).
WalshSpectrum walsh_transform(const BooleanFunction& f);

/// Same result through the serial kernel.
WalshSpectrum walsh_transform_serial(const BooleanFunction& f);

/// Direct O(2^n) summation for a single w.
std::int64_t walsh_value_naive(const BooleanFunction& f, Vec w);

/// C_f(a) = sum_x (-1)^(f(x) + f(x ^ a)), direct summation.
std::int64_t correlation(const BooleanFunction& f, Vec a);

struct DerivativeCounts {
    std::uint64_t count0;  // |{x : f(x ^ a) + f(x) = 0}|
    std::uint64_t count1;  // |{x : f(x ^ a) + f(x) = 1}|

    std::uint64_t operator[](bool i) const noexcept { return i ? count1 : count0; }
    friend bool operator==(const DerivativeCounts&, const DerivativeCounts&) = default;
};

DerivativeCounts derivative_counts(const BooleanFunction& f, Vec a);

/// 2^n * C_f(a) for every a, from the spectrum: the Walsh-Hadamard transform
/// of the squared coefficients.
std::vector<std::int64_t> autocorrelation_from_spectrum(const WalshSpectrum& spectrum);

/// Derivative counts for every (a, i) and the relative differential uniformity.
class DifferentialProfile {
public:
    DifferentialProfile(int n, std::vector<std::uint64_t> count0);

    int n() const noexcept { return n_; }
    DerivativeCounts counts(Vec a) const noexcept {
        return {count0_[a], table_size(n_) - count0_[a]};
    }

    /// max over a != 0 and i of counts(a)[i], the numerator of delta_f.
    std::uint64_t max_count() const noexcept { return max_count_; }
    Rational delta() const { return Rational(static_cast<std::int64_t>(max_count_), std::int64_t(table_size(n_))); }

    /// The lexicographically first (a, i) attaining max_count.
    std::pair<Vec, bool> witness() const noexcept { return witness_; }

    friend bool operator==(const DifferentialProfile& a, const DifferentialProfile& b) {
        return a.n_ == b.n_ && a.count0_ == b.count0_;
    }

private:
    int n_;
    std::vector<std::uint64_t> count0_;
    std::uint64_t max_count_ = 0;
    std::pair<Vec, bool> witness_{0, false};
};

/// Spectral route: two transforms, O(n 2^n).
DifferentialProfile differential_profile(const BooleanFunction& f);
DifferentialProfile differential_profile(const BooleanFunction& f, const WalshSpectrum& spectrum);

/// Enumeration route, O(4^n / 64); limited to n <= 12.
DifferentialProfile differential_profile_naive(const BooleanFunction& f);

struct Theorem1Sides {
    std::int64_t spectral_sum;  // sum over w.a = i of coeff(w)^2
    std::int64_t scaled_count;  // 2^n * |{x : f(x ^ a) + f(x) = i}|

    bool holds() const noexcept { return spectral_sum == scaled_count; }
};

/// Both sides of the spectrum/derivative identity, each computed independently
/// (direct sum over the spectrum, direct count over the truth table).
Theorem1Sides theorem1_check(const BooleanFunction& f, const WalshSpectrum& spectrum, Vec a, bool i);
Theorem1Sides theorem1_check(const BooleanFunction& f, Vec a, bool i);

}  // namespace bvls
