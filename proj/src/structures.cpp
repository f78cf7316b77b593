#include "bvls/structures.hpp"

#include <stdexcept>

#include "bvls/kernels.hpp"

namespace bvls {

SpectralSupport spectral_support(const WalshSpectrum& spectrum) {
    SpectralSupport s;
    s.n = spectrum.n();
    XorBasis basis(s.n);
    const auto coeffs = spectrum.coeffs();
    for (std::size_t w = 0; w < coeffs.size(); ++w) {
        if (coeffs[w] == 0) continue;
        s.support.push_back(static_cast<Vec>(w));
        basis.insert(static_cast<Vec>(w));
    }
    s.dimension = basis.rank();
    return s;
}

StructureSets brute_force_linear_structures(const BooleanFunction& f) {
    if (f.n() > 16) throw std::invalid_argument("brute_force_linear_structures is limited to n <= 16");
    std::vector<std::uint64_t> ones(f.size());
    kernels::derivative_weights_all(f, ones);
    std::vector<Vec> u0, u1;
    for (std::size_t a = 0; a < ones.size(); ++a) {
        if (ones[a] == 0) u0.push_back(static_cast<Vec>(a));
        if (ones[a] == f.size()) u1.push_back(static_cast<Vec>(a));
    }
    return {AffineSolutionSet::from_members(f.n(), u0), AffineSolutionSet::from_members(f.n(), u1)};
}

StructureSets spectral_linear_structures(const SpectralSupport& support) {
    StructureSets sets{solve_affine_system(support.n, support.support, false),
                       solve_affine_system(support.n, support.support, true)};
    // Substitution audit against the whole support; elimination over the
    // augmented rows makes this hold by construction.
    for (bool i : {false, true}) {
        const auto p = sets[i].particular();
        if (!p) continue;
        for (Vec w : support.support)
            if (dot(w, *p) != i) throw std::logic_error("affine solution fails a support equation");
    }
    return sets;
}

StructureSets spectral_linear_structures(const WalshSpectrum& spectrum) {
    return spectral_linear_structures(spectral_support(spectrum));
}

bool prop1_check(const SpectralSupport& support) {
    return !support.support.empty() && support.support.front() == 0;
}

std::optional<std::pair<Vec, Vec>> prop2_check(const SpectralSupport& support) {
    const auto& s = support.support;
    if (s.size() > (std::size_t{1} << 16)) throw std::invalid_argument("prop2_check: support larger than 2^16");
    std::vector<bool> member(table_size(support.n), false);
    for (Vec w : s) member[w] = true;
    for (std::size_t j = 0; j < s.size(); ++j)
        for (std::size_t k = j + 1; k < s.size(); ++k)
            if (member[s[j] ^ s[k]]) return std::make_pair(s[j], s[k]);
    return std::nullopt;
}

Prop3Dimensions prop3_dimensions(const WalshSpectrum& spectrum) {
    const SpectralSupport support = spectral_support(spectrum);
    Prop3Dimensions d;
    d.rank = support.dimension;
    d.dim_u0 = spectrum.n() - d.rank;
    const AffineSolutionSet u1 = solve_affine_system(support.n, support.support, true);
    bool consistent = !u1.empty();
    if (consistent)
        for (Vec w : support.support)
            if (!dot(w, *u1.particular())) consistent = false;
    d.u1_nonempty = consistent;
    return d;
}

}  // namespace bvls
