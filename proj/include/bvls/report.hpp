#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "bvls/algorithm1.hpp"
#include "bvls/boolfn.hpp"
#include "bvls/gf2.hpp"
#include "bvls/rational.hpp"

namespace bvls {

/// Sets up to this size are listed element by element in reports.
inline constexpr std::size_t kDefaultEnumerationLimit = 64;

/// "p/q (0.123456)", or just "p" for integers.
std::string format_rational(const Rational& r);

/// "{000, 111}" for small sets, "111 + span{001, 010}" otherwise, "{}" when empty.
std::string format_set(const AffineSolutionSet& set, std::size_t limit = kDefaultEnumerationLimit);

struct AuditEntry {
    Vec vector = 0;
    bool rhs = false;
    QuasiCheck check{false, Rational(0)};
};

/// quasi_check on every nonzero element of A^0 and every element of A^1.
std::vector<AuditEntry> audit_report(const BooleanFunction& f, const StructureReport& report);

nlohmann::ordered_json rational_json(const Rational& r);
nlohmann::ordered_json solution_set_json(const AffineSolutionSet& set,
                                         std::size_t limit = kDefaultEnumerationLimit);
nlohmann::ordered_json report_json(const StructureReport& report, const std::vector<AuditEntry>* audit = nullptr);

}  // namespace bvls
