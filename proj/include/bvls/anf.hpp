#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bvls/bits.hpp"
#include "bvls/boolfn.hpp"

namespace bvls {

/// Algebraic normal form: an XOR of monomials over GF(2).
///
/// A monomial is stored as a variable mask using the same convention as Vec
/// (x_1 is the most significant bit). The empty mask is the constant 1.
class AnfExpression {
public:
    explicit AnfExpression(int n);
    AnfExpression(int n, std::set<Vec> monomials);

    int n() const noexcept { return n_; }
    const std::set<Vec>& monomials() const noexcept { return monomials_; }

    /// XOR-adds a monomial: an existing one cancels.
    void toggle(Vec monomial);

    /// Variable indices (1-based, ascending) of a monomial mask.
    std::vector<int> variables(Vec monomial) const;

    friend bool operator==(const AnfExpression&, const AnfExpression&) = default;

private:
    int n_;
    std::set<Vec> monomials_;
};

class AnfParseError : public std::runtime_error {
public:
    AnfParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Grammar (whitespace ignored):
///   expression := term ('+' term)*
///   term       := '0' | '1' | factor+
///   factor     := 'x' integer        integer in [1, n]
/// Throws AnfParseError on syntax or range errors, std::invalid_argument on bad n.
AnfExpression parse_anf(std::string_view text, int n);

/// Inverse printer for parse_anf, e.g. "x1+x2+x1x2". The empty expression is "0".
std::string render_anf(const AnfExpression& expr);

BooleanFunction anf_to_function(const AnfExpression& expr);

}  // namespace bvls
