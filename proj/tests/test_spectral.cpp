#include <gtest/gtest.h>

#include <random>

#include "bvls/anf.hpp"
#include "bvls/spectral.hpp"

using namespace bvls;

namespace {

BooleanFunction fixture3() { return anf_to_function(parse_anf("x1+x2+x1x2+x2x3+x1x3", 3)); }

std::vector<std::int32_t> coeffs_of(const WalshSpectrum& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

}  // namespace

TEST(WalshTransform, Fixture) {
    // w = 000, 001, ..., 111
    EXPECT_EQ(coeffs_of(walsh_transform(fixture3())), (std::vector<std::int32_t>{0, -4, 4, 0, 4, 0, 0, 4}));
    EXPECT_EQ(walsh_transform(fixture3()).normalized(0b001), Rational(-1, 2));
}

TEST(WalshTransform, ConstantAndLinear) {
    const WalshSpectrum zero = walsh_transform(BooleanFunction(3));
    EXPECT_EQ(coeffs_of(zero), (std::vector<std::int32_t>{8, 0, 0, 0, 0, 0, 0, 0}));
    for (Vec a : {0u, 5u, 9u, 15u}) {
        const WalshSpectrum s = walsh_transform(make_linear(4, a));
        for (Vec w = 0; w < 16; ++w) ASSERT_EQ(s[w], w == a ? 16 : 0);
    }
}

TEST(WalshTransform, InnerProductBentIsFlat) {
    // Frozen from a direct-summation script.
    const std::vector<std::int32_t> expected = {4, 4, 4, 4, 4, -4, 4, -4, 4, 4, -4, -4, 4, -4, -4, 4};
    EXPECT_EQ(coeffs_of(walsh_transform(make_inner_product_bent(4))), expected);
    for (int n : {2, 6, 8, 10}) {
        const WalshSpectrum s = walsh_transform(make_inner_product_bent(n));
        for (auto c : s.coeffs()) ASSERT_EQ(std::abs(c), 1 << (n / 2));
    }
}

TEST(WalshTransform, FastMatchesNaiveExhaustively) {
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const BooleanFunction f = random_function(n, seed * 31 + static_cast<std::uint64_t>(n));
            const WalshSpectrum fast = walsh_transform(f);
            ASSERT_EQ(fast, walsh_transform_serial(f));
            for (Vec w = 0; w < f.size(); ++w) ASSERT_EQ(fast[w], walsh_value_naive(f, w));
        }
    }
    EXPECT_EQ(walsh_value_naive(fixture3(), 0b001), -4);
    EXPECT_EQ(walsh_value_naive(BooleanFunction(2), 0), 4);
}

TEST(WalshSpectrum, RejectsParsevalViolation) {
    EXPECT_THROW(WalshSpectrum(2, {4, 0, 0, 2}), std::invalid_argument);
    EXPECT_THROW(WalshSpectrum(2, {4, 0, 0}), std::invalid_argument);
    EXPECT_NO_THROW(WalshSpectrum(2, {2, 2, 2, -2}));
}

TEST(WalshSpectrum, ParsevalAndEvenCoefficients) {
    for (int n = 1; n <= 14; ++n) {
        const WalshSpectrum s = walsh_transform(random_function(n, 77 + static_cast<std::uint64_t>(n)));
        EXPECT_EQ(s.energy(), std::int64_t{1} << (2 * n));
        for (auto c : s.coeffs()) ASSERT_EQ(c % 2, 0);
    }
}

TEST(Correlation, Examples) {
    const BooleanFunction f = random_function(6, 1);
    EXPECT_EQ(correlation(f, 0), 64);
    EXPECT_EQ(correlation(fixture3(), 0b111), -8);
    EXPECT_EQ(correlation(make_inner_product_bent(2), 0b01), 0);
}

TEST(DerivativeCounts, Examples) {
    const BooleanFunction f = random_function(7, 2);
    EXPECT_EQ(derivative_counts(f, 0), (DerivativeCounts{128, 0}));
    EXPECT_EQ(derivative_counts(fixture3(), 0b111), (DerivativeCounts{0, 8}));
    EXPECT_EQ(derivative_counts(make_inner_product_bent(2), 0b10), (DerivativeCounts{2, 2}));
}

TEST(DerivativeCounts, SumAndParity) {
    for (int n = 1; n <= 10; ++n) {
        const BooleanFunction f = random_function(n, 300 + static_cast<std::uint64_t>(n));
        for (Vec a = 1; a < f.size(); ++a) {
            const DerivativeCounts c = derivative_counts(f, a);
            ASSERT_EQ(c.count0 + c.count1, f.size());
            // x and x ^ a land in the same class, so both counts are even.
            ASSERT_EQ(c.count0 % 2, 0u);
            ASSERT_EQ(c.count1 % 2, 0u);
        }
    }
}

TEST(CorrelationIdentity, CorrelationEqualsSignedEnergy) {
    auto check = [](const BooleanFunction& f, Vec a) {
        const WalshSpectrum s = walsh_transform(f);
        std::int64_t signed_energy = 0;
        for (Vec w = 0; w < f.size(); ++w) {
            const std::int64_t sq = std::int64_t{s[w]} * s[w];
            signed_energy += dot(w, a) ? -sq : sq;
        }
        return (correlation(f, a) << f.n()) == signed_energy;
    };
    for (int n = 1; n <= 8; ++n) {
        const BooleanFunction f = random_function(n, 900 + static_cast<std::uint64_t>(n));
        for (Vec a = 0; a < f.size(); ++a) ASSERT_TRUE(check(f, a)) << "n=" << n << " a=" << a;
    }
    std::mt19937_64 rng(5);
    for (int n = 9; n <= 14; ++n) {
        const BooleanFunction f = random_function(n, rng());
        for (int k = 0; k < 8; ++k) ASSERT_TRUE(check(f, static_cast<Vec>(rng() % f.size())));
    }
}

TEST(CorrelationIdentity, SpectralAutocorrelationMatchesDirect) {
    for (int n = 1; n <= 10; ++n) {
        const BooleanFunction f = random_function(n, 40 + static_cast<std::uint64_t>(n));
        const auto scaled = autocorrelation_from_spectrum(walsh_transform(f));
        for (Vec a = 0; a < f.size(); ++a) ASSERT_EQ(scaled[a], correlation(f, a) << n);
    }
}

TEST(SplitEnergyIdentity, Examples) {
    const Theorem1Sides s = theorem1_check(fixture3(), 0b111, true);
    EXPECT_EQ(s.spectral_sum, 64);
    EXPECT_EQ(s.scaled_count, 64);
    const BooleanFunction f = random_function(5, 8);
    const Theorem1Sides z = theorem1_check(f, 0, false);
    EXPECT_EQ(z.spectral_sum, 1 << 10);
    EXPECT_TRUE(z.holds());
}

TEST(SplitEnergyIdentity, HoldsForAllPairsExhaustively) {
    for (int n = 1; n <= 8; ++n) {
        const BooleanFunction f = random_function(n, 600 + static_cast<std::uint64_t>(n));
        const WalshSpectrum s = walsh_transform(f);
        for (Vec a = 0; a < f.size(); ++a)
            for (bool i : {false, true}) ASSERT_TRUE(theorem1_check(f, s, a, i).holds()) << n << ' ' << a << ' ' << i;
    }
}

TEST(DifferentialProfile, Examples) {
    EXPECT_EQ(differential_profile(make_inner_product_bent(4)).delta(), Rational(1, 2));
    EXPECT_EQ(differential_profile(make_inner_product_bent(2)).delta(), Rational(1, 2));
    EXPECT_EQ(differential_profile(BooleanFunction(3)).delta(), Rational(1));

    const DifferentialProfile p = differential_profile(fixture3());
    EXPECT_EQ(p.delta(), Rational(1));
    EXPECT_EQ(p.counts(0b111), (DerivativeCounts{0, 8}));
    EXPECT_EQ(p.max_count(), 8u);
}

TEST(DifferentialProfile, SpectralRouteMatchesEnumeration) {
    for (int n = 1; n <= 12; ++n) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const BooleanFunction f = random_function(n, seed + 1000 * static_cast<std::uint64_t>(n));
            const DifferentialProfile fast = differential_profile(f);
            const DifferentialProfile slow = differential_profile_naive(f);
            ASSERT_EQ(fast, slow);
            ASSERT_EQ(fast.delta(), slow.delta());
            ASSERT_GE(fast.delta(), Rational(1, 2));
            ASSERT_LE(fast.delta(), Rational(1));
        }
    }
    EXPECT_THROW(differential_profile_naive(random_function(13, 0)), std::invalid_argument);
}
