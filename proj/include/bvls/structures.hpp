#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bvls/boolfn.hpp"
#include "bvls/gf2.hpp"
#include "bvls/spectral.hpp"

namespace bvls {

/// Linear structures of f: u0 = U_f^0, u1 = U_f^1.
struct StructureSets {
    AffineSolutionSet u0;
    AffineSolutionSet u1;

    const AffineSolutionSet& operator[](bool i) const noexcept { return i ? u1 : u0; }
    bool has_nonzero() const noexcept { return u0.dimension() > 0 || !u1.empty(); }

    friend bool operator==(const StructureSets&, const StructureSets&) = default;
};

/// The w with nonzero Walsh coefficient, and their GF(2) rank.
struct SpectralSupport {
    int n = 0;
    std::vector<Vec> support;  // ascending
    int dimension = 0;
};

SpectralSupport spectral_support(const WalshSpectrum& spectrum);

/// Definitional route: tests f(x ^ a) + f(x) = i over all x for every a.
/// Limited to n <= 16.
StructureSets brute_force_linear_structures(const BooleanFunction& f);

/// Spectral route: u_i = {a : w.a = i for all w in the support}.
StructureSets spectral_linear_structures(const WalshSpectrum& spectrum);
StructureSets spectral_linear_structures(const SpectralSupport& support);

/// True iff 0 is in the support, which rules out U_f^1.
bool prop1_check(const SpectralSupport& support);

/// A pair w1, w2 in the support with w1 ^ w2 also in the support, if any.
/// Such a triple makes x.w = 1 inconsistent. Requires |support| <= 2^16.
std::optional<std::pair<Vec, Vec>> prop2_check(const SpectralSupport& support);

struct Prop3Dimensions {
    int rank = 0;        // k, rank of the support
    int dim_u0 = 0;      // n - k
    bool u1_nonempty = false;
};

Prop3Dimensions prop3_dimensions(const WalshSpectrum& spectrum);

}  // namespace bvls
