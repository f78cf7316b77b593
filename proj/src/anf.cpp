#include "bvls/anf.hpp"

#include <cctype>
#include <vector>

namespace bvls {

AnfExpression::AnfExpression(int n) : n_(n) { check_var_count(n); }

AnfExpression::AnfExpression(int n, std::set<Vec> monomials) : n_(n), monomials_(std::move(monomials)) {
    check_var_count(n);
    for (Vec m : monomials_)
        if (m >= table_size(n)) throw std::invalid_argument("monomial uses a variable outside [1, n]");
}

void AnfExpression::toggle(Vec monomial) {
    if (monomial >= table_size(n_)) throw std::invalid_argument("monomial uses a variable outside [1, n]");
    if (!monomials_.erase(monomial)) monomials_.insert(monomial);
}

std::vector<int> AnfExpression::variables(Vec monomial) const {
    std::vector<int> vars;
    for (int i = 1; i <= n_; ++i)
        if (monomial & var_mask(n_, i)) vars.push_back(i);
    return vars;
}

namespace {

class AnfParser {
public:
    AnfParser(std::string_view text, int n) : text_(text), n_(n) {}

    AnfExpression parse() {
        AnfExpression expr(n_);
        parse_term(expr);
        while (skip_ws(), pos_ < text_.size()) {
            if (text_[pos_] != '+') fail("expected '+'");
            ++pos_;
            parse_term(expr);
        }
        return expr;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw AnfParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void parse_term(AnfExpression& expr) {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a term");
        const char c = text_[pos_];
        if (c == '0' || c == '1') {
            ++pos_;
            if (c == '1') expr.toggle(0);
            return;
        }
        if (c != 'x') fail("expected '0', '1' or 'x<index>'");
        Vec monomial = 0;
        while (skip_ws(), pos_ < text_.size() && text_[pos_] == 'x') {
            ++pos_;
            monomial |= var_mask(n_, parse_index());
        }
        expr.toggle(monomial);
    }

    int parse_index() {
        skip_ws();
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > kMaxVars * 10L) value = kMaxVars * 10L;  // clamp; reported as out of range below
            ++pos_;
        }
        if (pos_ == start) fail("expected a variable index after 'x'");
        if (value < 1 || value > n_) {
            throw AnfParseError("variable index " + std::string(text_.substr(start, pos_ - start)) +
                                    " outside [1, " + std::to_string(n_) + "]",
                                start);
        }
        return static_cast<int>(value);
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

AnfExpression parse_anf(std::string_view text, int n) {
    check_var_count(n);
    return AnfParser(text, n).parse();
}

std::string render_anf(const AnfExpression& expr) {
    if (expr.monomials().empty()) return "0";
    std::string out;
    for (Vec m : expr.monomials()) {
        if (!out.empty()) out += '+';
        if (m == 0) {
            out += '1';
            continue;
        }
        for (int v : expr.variables(m)) out += 'x' + std::to_string(v);
    }
    return out;
}

BooleanFunction anf_to_function(const AnfExpression& expr) {
    // Binary Moebius (subset-sum) transform of the coefficient vector:
    // f(x) = XOR of coeff[m] over all m contained in x.
    const int n = expr.n();
    std::vector<std::uint8_t> table(table_size(n), 0);
    for (Vec m : expr.monomials()) table[m] = 1;
    for (std::uint64_t h = 1; h < table.size(); h <<= 1)
        for (std::uint64_t base = 0; base < table.size(); base += 2 * h)
            for (std::uint64_t j = base; j < base + h; ++j) table[j + h] ^= table[j];
    return BooleanFunction::from_bits(n, table);
}

}  // namespace bvls
