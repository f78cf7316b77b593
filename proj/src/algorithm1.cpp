#include "bvls/algorithm1.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bvls/spectral.hpp"

namespace bvls {

const char* to_string(Verdict v) noexcept {
    return v == Verdict::NoLinearStructure ? "NoLinearStructure" : "QuasiStructures";
}

StructureReport run_algorithm1(BvSampler& sampler, const Algorithm1Options& options) {
    if (options.max_rounds < 1) throw std::invalid_argument("run_algorithm1: rounds must be >= 1");
    const int n = sampler.n();

    StructureReport report;
    report.n = n;
    report.rounds_requested = options.max_rounds;
    report.a0 = AffineSolutionSet::full(n);
    report.a1 = AffineSolutionSet::full(n);

    Gf2System h(n);
    XorBasis span(n);
    for (int round = 1; round <= options.max_rounds; ++round) {
        for (Vec w : sampler.sample_batch(static_cast<std::size_t>(samples_per_round(n)))) {
            if (h.insert(w)) span.insert(w);
        }
        report.bv_runs += static_cast<std::uint64_t>(samples_per_round(n));
        report.rounds_used = round;
        report.a0 = solve_affine_system(h, false);
        report.a1 = solve_affine_system(h, true);

        report.history.push_back(RoundRecord{
            .round = round,
            .bv_runs = report.bv_runs,
            .h_size = h.size(),
            .rank = span.rank(),
            .a0_dimension = report.a0.dimension(),
            .a1_empty = report.a1.empty(),
            .zero_in_h = h.contains(0),
        });

        if (report.a0.dimension() == 0 && report.a1.empty()) {
            report.verdict = Verdict::NoLinearStructure;
            break;
        }
    }
    if (report.verdict != Verdict::NoLinearStructure) report.verdict = Verdict::QuasiStructures;

    report.epsilon = options.epsilon.value_or(1.0 / std::sqrt(static_cast<double>(report.bv_runs)));
    report.failure_bound = hoeffding_failure_bound(report.bv_runs, report.epsilon);
    return report;
}

StructureReport run_algorithm1(const BooleanFunction& f, int max_rounds, std::uint64_t seed,
                               std::optional<double> epsilon) {
    BvSampler sampler(walsh_transform(f), seed);
    return run_algorithm1(sampler, Algorithm1Options{.max_rounds = max_rounds, .epsilon = epsilon});
}

double hoeffding_failure_bound(std::uint64_t m, double epsilon) {
    if (m < 1) throw std::invalid_argument("hoeffding_failure_bound: m must be >= 1");
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("hoeffding_failure_bound: epsilon must lie in (0, 1]");
    return std::exp(-2.0 * static_cast<double>(m) * epsilon * epsilon);
}

ConfidenceInterval confidence_interval(std::uint64_t m, double lambda) {
    if (m < 1) throw std::invalid_argument("confidence_interval: m must be >= 1");
    if (!(lambda > 0.0 && lambda <= 0.5))
        throw std::invalid_argument("confidence_interval: lambda must lie in (0, 1/2]");
    const double md = static_cast<double>(m);
    return {std::pow(md, -lambda), 1.0 - std::exp(-2.0 * std::pow(md, 1.0 - 2.0 * lambda))};
}

std::uint64_t expected_bv_runs(const Rational& delta, int n, double c) {
    if (delta >= Rational(1)) throw std::domain_error("expected_bv_runs: delta = 1 means a true linear structure exists");
    if (delta < Rational(1, 2)) throw std::invalid_argument("expected_bv_runs: delta must be at least 1/2");
    if (!(c > 0.0)) throw std::invalid_argument("expected_bv_runs: c must be positive");
    check_var_count(n);
    // (n + 1) c / (1 - delta) = (n + 1) c den / (den - num)
    const double value = static_cast<double>(n + 1) * c * static_cast<double>(delta.den()) /
                         static_cast<double>(delta.den() - delta.num());
    return static_cast<std::uint64_t>(std::ceil(value));
}

QuasiCheck quasi_check(const BooleanFunction& f, Vec a, bool i, double epsilon) {
    if (f.n() > 16) throw std::invalid_argument("quasi_check is limited to n <= 16");
    if (a >= f.size()) throw std::invalid_argument("quasi_check: vector has more than n bits");
    const DerivativeCounts counts = derivative_counts(f, a);
    const auto size = static_cast<std::int64_t>(f.size());
    const Rational deficiency(size - static_cast<std::int64_t>(counts[i]), size);
    return {deficiency.to_double() < epsilon, deficiency};
}

}  // namespace bvls
