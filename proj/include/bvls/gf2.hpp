#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "bvls/bits.hpp"

namespace bvls {

/// Row-reduced basis of a subspace of F_2^n, built incrementally.
///
/// Each stored vector has a distinct leading bit (its pivot) and no other
/// stored vector has that bit set, so the representation of a subspace is unique.
class XorBasis {
public:
    explicit XorBasis(int n) : n_(n) {}

    /// Adds v; returns false if v was already in the span.
    bool insert(Vec v);

    /// v with every pivot bit cleared; zero iff v is in the span.
    Vec reduce(Vec v) const noexcept;
    bool contains(Vec v) const noexcept { return reduce(v) == 0; }

    int n() const noexcept { return n_; }
    int rank() const noexcept { return rank_; }

    /// Basis vectors ordered by descending pivot.
    std::vector<Vec> vectors() const;

    friend bool operator==(const XorBasis&, const XorBasis&) = default;

private:
    int n_;
    int rank_ = 0;
    std::array<Vec, 32> by_pivot_{};  // by_pivot_[b] has leading bit b, or 0
};

/// Solution set of a GF(2) affine system: empty, or particular + span(kernel).
///
/// Stored canonically (reduced kernel basis, particular reduced against it),
/// so two sets are equal exactly when their representations are.
class AffineSolutionSet {
public:
    static AffineSolutionSet full(int n);
    static AffineSolutionSet none(int n);
    static AffineSolutionSet coset(Vec particular, const XorBasis& kernel);

    /// Builds the set from an explicit member list. Throws std::logic_error if
    /// the members do not form an affine subspace.
    static AffineSolutionSet from_members(int n, std::span<const Vec> members);

    int n() const noexcept { return kernel_.n(); }
    bool empty() const noexcept { return !particular_.has_value(); }
    std::optional<Vec> particular() const noexcept { return particular_; }
    const XorBasis& kernel() const noexcept { return kernel_; }
    std::vector<Vec> kernel_basis() const { return kernel_.vectors(); }

    /// Dimension of the kernel; meaningless when empty.
    int dimension() const noexcept { return kernel_.rank(); }
    std::uint64_t cardinality() const noexcept {
        return empty() ? 0 : std::uint64_t{1} << kernel_.rank();
    }

    bool contains(Vec x) const noexcept;
    bool is_subset_of(const AffineSolutionSet& other) const;

    /// Visits every element in Gray-code order.
    void for_each(const std::function<void(Vec)>& visit) const;

    /// All elements in ascending order.
    std::vector<Vec> elements() const;

    friend bool operator==(const AffineSolutionSet&, const AffineSolutionSet&) = default;

private:
    AffineSolutionSet(std::optional<Vec> particular, XorBasis kernel)
        : particular_(particular), kernel_(std::move(kernel)) {}

    std::optional<Vec> particular_;
    XorBasis kernel_;
};

/// The collected sample set H: distinct vectors of F_2^n.
class Gf2System {
public:
    explicit Gf2System(int n) : n_(n) {}

    /// Returns true if w was new.
    bool insert(Vec w) { return rows_.insert(w).second; }

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return rows_.size(); }
    const std::set<Vec>& rows() const noexcept { return rows_; }
    bool contains(Vec w) const { return rows_.contains(w); }

private:
    int n_;
    std::set<Vec> rows_;
};

/// Solves {x : x.w = rhs for every row w} by Gaussian elimination on the
/// augmented rows. Every row carries the same right-hand side. An empty row
/// set yields all of F_2^n for either rhs.
AffineSolutionSet solve_affine_system(int n, std::span<const Vec> rows, bool rhs);
AffineSolutionSet solve_affine_system(const Gf2System& system, bool rhs);

/// GF(2) rank of a set of vectors.
int gf2_rank(int n, std::span<const Vec> vectors);

}  // namespace bvls
