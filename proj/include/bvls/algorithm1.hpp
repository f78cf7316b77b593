#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bvls/boolfn.hpp"
#include "bvls/gf2.hpp"
#include "bvls/quantum_sim.hpp"
#include "bvls/rational.hpp"

namespace bvls {

enum class Verdict { NoLinearStructure, QuasiStructures };

const char* to_string(Verdict v) noexcept;

struct RoundRecord {
    int round = 0;
    std::uint64_t bv_runs = 0;    // cumulative
    std::size_t h_size = 0;       // distinct vectors collected so far
    int rank = 0;                 // GF(2) rank of H
    int a0_dimension = 0;
    bool a1_empty = false;
    bool zero_in_h = false;
};

struct StructureReport {
    int n = 0;
    Verdict verdict = Verdict::QuasiStructures;
    AffineSolutionSet a0 = AffineSolutionSet::full(1);
    AffineSolutionSet a1 = AffineSolutionSet::full(1);
    std::uint64_t bv_runs = 0;
    int rounds_used = 0;
    int rounds_requested = 0;
    double epsilon = 0.0;
    double failure_bound = 1.0;  // e^(-2 m eps^2) with m = bv_runs
    std::vector<RoundRecord> history;

    const AffineSolutionSet& operator[](bool i) const noexcept { return i ? a1 : a0; }
};

struct Algorithm1Options {
    int max_rounds = 1;
    /// Accuracy parameter for the confidence statement; defaults to
    /// bv_runs^(-1/2) evaluated at termination.
    std::optional<double> epsilon;
};

/// BV runs per round. Fixed by the algorithm at n + 1; not derived.
inline constexpr int samples_per_round(int n) noexcept { return n + 1; }

/// Iterated BV sampling with early "no" termination. Each round draws n + 1
/// samples into H, solves x.H = 0 and x.H = 1, and halts with
/// NoLinearStructure the first time A^0 = {0} and A^1 is empty.
StructureReport run_algorithm1(BvSampler& sampler, const Algorithm1Options& options);
StructureReport run_algorithm1(const BooleanFunction& f, int max_rounds, std::uint64_t seed,
                               std::optional<double> epsilon = std::nullopt);

/// e^(-2 m eps^2). Throws std::invalid_argument unless m >= 1 and 0 < eps <= 1.
double hoeffding_failure_bound(std::uint64_t m, double epsilon);

struct ConfidenceInterval {
    double epsilon;     // m^(-lambda); p lies in (1 - epsilon, 1]
    double confidence;  // 1 - e^(-2 m^(1 - 2 lambda))
};

/// Interval form of the bound with eps = m^(-lambda), 0 < lambda <= 1/2.
ConfidenceInterval confidence_interval(std::uint64_t m, double lambda);

/// ceil((n + 1) * c / (1 - delta)): planning estimate for the BV runs needed
/// to certify "no structure". Throws std::domain_error if delta >= 1 and
/// std::invalid_argument if delta < 1/2 or c <= 0.
std::uint64_t expected_bv_runs(const Rational& delta, int n, double c);

struct QuasiCheck {
    bool is_quasi;
    Rational deficiency;  // 1 - |V_{f,a}^i| / 2^n
};

/// Ground-truth audit of a candidate (a, i) against threshold epsilon. n <= 16.
QuasiCheck quasi_check(const BooleanFunction& f, Vec a, bool i, double epsilon);

}  // namespace bvls
