#include "bvls/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace bvls {

std::string format_rational(const Rational& r) {
    if (r.den() == 1) return r.str();
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.6g)", r.to_double());
    return r.str() + buf;
}

std::string format_set(const AffineSolutionSet& set, std::size_t limit) {
    if (set.empty()) return "{}";
    const int n = set.n();
    std::string out;
    if (set.cardinality() <= limit) {
        out = "{";
        for (Vec v : set.elements()) {
            if (out.size() > 1) out += ", ";
            out += to_bitstring(v, n);
        }
        return out + "}";
    }
    out = to_bitstring(*set.particular(), n) + " + span{";
    bool first = true;
    for (Vec b : set.kernel_basis()) {
        if (!first) out += ", ";
        out += to_bitstring(b, n);
        first = false;
    }
    return out + "}";
}

std::vector<AuditEntry> audit_report(const BooleanFunction& f, const StructureReport& report) {
    if (f.n() > 16) throw std::invalid_argument("audit is limited to n <= 16");
    std::vector<AuditEntry> entries;
    for (bool i : {false, true}) {
        const AffineSolutionSet& set = i ? report.a1 : report.a0;
        for (Vec a : set.elements()) {
            if (!i && a == 0) continue;
            entries.push_back({a, i, quasi_check(f, a, i, report.epsilon)});
        }
    }
    return entries;
}

nlohmann::ordered_json rational_json(const Rational& r) {
    nlohmann::ordered_json j;
    j["num"] = r.num();
    j["den"] = r.den();
    j["decimal"] = r.to_double();
    return j;
}

nlohmann::ordered_json solution_set_json(const AffineSolutionSet& set, std::size_t limit) {
    const int n = set.n();
    nlohmann::ordered_json j;
    j["empty"] = set.empty();
    if (set.empty()) return j;
    j["dimension"] = set.dimension();
    j["cardinality"] = set.cardinality();
    j["offset"] = to_bitstring(*set.particular(), n);
    auto basis = nlohmann::ordered_json::array();
    for (Vec b : set.kernel_basis()) basis.push_back(to_bitstring(b, n));
    j["basis"] = std::move(basis);
    if (set.cardinality() <= limit) {
        auto elements = nlohmann::ordered_json::array();
        for (Vec v : set.elements()) elements.push_back(to_bitstring(v, n));
        j["elements"] = std::move(elements);
    }
    return j;
}

nlohmann::ordered_json report_json(const StructureReport& report, const std::vector<AuditEntry>* audit) {
    nlohmann::ordered_json j;
    j["verdict"] = to_string(report.verdict);
    j["n"] = report.n;
    j["rounds_requested"] = report.rounds_requested;
    j["rounds_used"] = report.rounds_used;
    j["samples_per_round"] = samples_per_round(report.n);
    j["bv_runs"] = report.bv_runs;
    j["epsilon"] = report.epsilon;
    j["failure_bound"] = report.failure_bound;
    j["confidence"] = 1.0 - report.failure_bound;
    j["a0"] = solution_set_json(report.a0);
    j["a1"] = solution_set_json(report.a1);
    auto history = nlohmann::ordered_json::array();
    for (const RoundRecord& r : report.history) {
        nlohmann::ordered_json h;
        h["round"] = r.round;
        h["bv_runs"] = r.bv_runs;
        h["h_size"] = r.h_size;
        h["rank"] = r.rank;
        h["a0_dimension"] = r.a0_dimension;
        h["a1_empty"] = r.a1_empty;
        h["zero_in_h"] = r.zero_in_h;
        history.push_back(std::move(h));
    }
    j["history"] = std::move(history);
    if (audit) {
        auto entries = nlohmann::ordered_json::array();
        for (const AuditEntry& e : *audit) {
            nlohmann::ordered_json a;
            a["vector"] = to_bitstring(e.vector, report.n);
            a["rhs"] = e.rhs ? 1 : 0;
            a["deficiency"] = rational_json(e.check.deficiency);
            a["is_quasi"] = e.check.is_quasi;
            entries.push_back(std::move(a));
        }
        j["audit"] = std::move(entries);
    }
    return j;
}

}  // namespace bvls
