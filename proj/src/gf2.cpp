#include "bvls/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bvls {

bool XorBasis::insert(Vec v) {
    v = reduce(v);
    if (v == 0) return false;
    const int pivot = std::bit_width(v) - 1;
    // Keep the basis fully reduced: clear the new pivot from every other vector.
    for (auto& b : by_pivot_)
        if (b & (Vec{1} << pivot)) b ^= v;
    by_pivot_[static_cast<std::size_t>(pivot)] = v;
    ++rank_;
    return true;
}

Vec XorBasis::reduce(Vec v) const noexcept {
    for (int bit = n_ - 1; bit >= 0; --bit)
        if ((v >> bit) & 1) {
            const Vec b = by_pivot_[static_cast<std::size_t>(bit)];
            if (b) v ^= b;
        }
    return v;
}

std::vector<Vec> XorBasis::vectors() const {
    std::vector<Vec> out;
    for (int bit = n_ - 1; bit >= 0; --bit)
        if (by_pivot_[static_cast<std::size_t>(bit)]) out.push_back(by_pivot_[static_cast<std::size_t>(bit)]);
    return out;
}

AffineSolutionSet AffineSolutionSet::full(int n) {
    XorBasis all(n);
    for (int bit = 0; bit < n; ++bit) all.insert(Vec{1} << bit);
    return AffineSolutionSet(Vec{0}, std::move(all));
}

AffineSolutionSet AffineSolutionSet::none(int n) { return AffineSolutionSet(std::nullopt, XorBasis(n)); }

AffineSolutionSet AffineSolutionSet::coset(Vec particular, const XorBasis& kernel) {
    return AffineSolutionSet(kernel.reduce(particular), kernel);
}

AffineSolutionSet AffineSolutionSet::from_members(int n, std::span<const Vec> members) {
    if (members.empty()) return none(n);
    const Vec base = members.front();
    XorBasis kernel(n);
    for (Vec m : members) kernel.insert(m ^ base);
    // A set is a coset exactly when it is as large as the coset it spans.
    std::vector<Vec> distinct(members.begin(), members.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() != (std::uint64_t{1} << kernel.rank()))
        throw std::logic_error("member list is not an affine subspace");
    return coset(base, kernel);
}

bool AffineSolutionSet::contains(Vec x) const noexcept {
    return particular_ && kernel_.reduce(x) == *particular_;
}

bool AffineSolutionSet::is_subset_of(const AffineSolutionSet& other) const {
    if (empty()) return true;
    if (!other.contains(*particular_)) return false;
    for (Vec b : kernel_.vectors())
        if (!other.kernel_.contains(b)) return false;
    return true;
}

void AffineSolutionSet::for_each(const std::function<void(Vec)>& visit) const {
    if (empty()) return;
    const std::vector<Vec> basis = kernel_.vectors();
    Vec x = *particular_;
    visit(x);
    const std::uint64_t count = cardinality();
    for (std::uint64_t k = 1; k < count; ++k) {
        x ^= basis[static_cast<std::size_t>(std::countr_zero(k))];
        visit(x);
    }
}

std::vector<Vec> AffineSolutionSet::elements() const {
    std::vector<Vec> out;
    out.reserve(cardinality());
    for_each([&](Vec x) { out.push_back(x); });
    std::sort(out.begin(), out.end());
    return out;
}

AffineSolutionSet solve_affine_system(int n, std::span<const Vec> rows, bool rhs) {
    // Augmented rows (w << 1) | rhs, eliminated on the coefficient bits only.
    // rows_by_pivot[p] holds a reduced row whose leading coefficient bit is p.
    std::array<std::uint64_t, 32> rows_by_pivot{};
    std::uint32_t pivots = 0;
    for (Vec w : rows) {
        std::uint64_t r = (std::uint64_t{w} << 1) | std::uint64_t{rhs};
        for (int p = n - 1; p >= 0 && (r >> 1) != 0; --p)
            if (((r >> (p + 1)) & 1) && ((pivots >> p) & 1)) r ^= rows_by_pivot[static_cast<std::size_t>(p)];
        if ((r >> 1) == 0) {
            if (r & 1) return AffineSolutionSet::none(n);  // 0 = 1
            continue;
        }
        const int p = std::bit_width(r >> 1) - 1;
        for (int q = 0; q < n; ++q)
            if (((pivots >> q) & 1) && ((rows_by_pivot[static_cast<std::size_t>(q)] >> (p + 1)) & 1))
                rows_by_pivot[static_cast<std::size_t>(q)] ^= r;
        rows_by_pivot[static_cast<std::size_t>(p)] = r;
        pivots |= std::uint32_t{1} << p;
    }

    // Pivot variables are determined by the free ones; free variables set to 0
    // give the particular solution.
    Vec particular = 0;
    for (int p = 0; p < n; ++p)
        if (((pivots >> p) & 1) && (rows_by_pivot[static_cast<std::size_t>(p)] & 1)) particular |= Vec{1} << p;

    XorBasis kernel(n);
    for (int j = 0; j < n; ++j) {
        if ((pivots >> j) & 1) continue;
        Vec k = Vec{1} << j;
        for (int p = 0; p < n; ++p)
            if (((pivots >> p) & 1) && ((rows_by_pivot[static_cast<std::size_t>(p)] >> (j + 1)) & 1))
                k |= Vec{1} << p;
        kernel.insert(k);
    }
    return AffineSolutionSet::coset(particular, kernel);
}

AffineSolutionSet solve_affine_system(const Gf2System& system, bool rhs) {
    const std::vector<Vec> rows(system.rows().begin(), system.rows().end());
    return solve_affine_system(system.n(), rows, rhs);
}

int gf2_rank(int n, std::span<const Vec> vectors) {
    XorBasis basis(n);
    for (Vec v : vectors) {
        basis.insert(v);
        if (basis.rank() == n) break;
    }
    return basis.rank();
}

}  // namespace bvls
