#include "bvls/truth_table_io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bvls {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BooleanFunction read_truth_table(std::istream& in) {
    std::string header, body;
    if (!std::getline(in, header)) throw std::runtime_error("truth table: missing 'n=<int>' line");
    header = trim(header);
    if (header.rfind("n=", 0) != 0) throw std::runtime_error("truth table: first line must be 'n=<int>'");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(header.substr(2), &used);
        if (used != header.size() - 2) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::runtime_error("truth table: malformed variable count '" + header + "'");
    }
    check_var_count(n);
    if (!std::getline(in, body)) throw std::runtime_error("truth table: missing table line");
    body = trim(body);

    const std::uint64_t size = table_size(n);
    std::vector<std::uint8_t> bits(size, 0);
    if (body.rfind("hex:", 0) == 0) {
        const std::string digits = body.substr(4);
        const std::uint64_t expected = (size + 3) / 4;
        if (digits.size() != expected)
            throw std::runtime_error("truth table: expected " + std::to_string(expected) + " hex digits, got " +
                                     std::to_string(digits.size()));
        for (std::size_t d = 0; d < digits.size(); ++d) {
            const int v = hex_value(digits[d]);
            if (v < 0) throw std::runtime_error("truth table: invalid hex digit '" + std::string(1, digits[d]) + "'");
            for (int b = 0; b < 4; ++b) {
                const std::uint64_t x = 4 * d + static_cast<std::uint64_t>(b);
                const bool bit = ((v >> (3 - b)) & 1) != 0;
                if (x < size)
                    bits[x] = bit;
                else if (bit)
                    throw std::runtime_error("truth table: padding bits of the last hex digit must be zero");
            }
        }
    } else {
        if (body.size() != size)
            throw std::runtime_error("truth table: expected " + std::to_string(size) + " binary digits, got " +
                                     std::to_string(body.size()));
        for (std::size_t x = 0; x < body.size(); ++x) {
            if (body[x] != '0' && body[x] != '1')
                throw std::runtime_error("truth table: invalid character at index " + std::to_string(x));
            bits[x] = body[x] == '1';
        }
    }
    return BooleanFunction::from_bits(n, bits);
}

BooleanFunction read_truth_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open truth table file '" + path + "'");
    return read_truth_table(in);
}

void write_truth_table(std::ostream& out, const BooleanFunction& f, TableEncoding encoding) {
    out << "n=" << f.n() << '\n';
    const std::uint64_t size = f.size();
    if (encoding == TableEncoding::Binary) {
        std::string line(size, '0');
        for (std::uint64_t x = 0; x < size; ++x)
            if (f(static_cast<Vec>(x))) line[x] = '1';
        out << line << '\n';
        return;
    }
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string line = "hex:";
    for (std::uint64_t d = 0; d < (size + 3) / 4; ++d) {
        int v = 0;
        for (int b = 0; b < 4; ++b) {
            const std::uint64_t x = 4 * d + static_cast<std::uint64_t>(b);
            if (x < size && f(static_cast<Vec>(x))) v |= 1 << (3 - b);
        }
        line += kDigits[v];
    }
    out << line << '\n';
}

}  // namespace bvls
