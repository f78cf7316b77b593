#include "bvls/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bvls/algorithm1.hpp"
#include "bvls/anf.hpp"
#include "bvls/quantum_sim.hpp"
#include "bvls/report.hpp"
#include "bvls/spectral.hpp"
#include "bvls/structures.hpp"
#include "bvls/truth_table_io.hpp"

namespace bvls::cli {

namespace {

constexpr int kInputError = 2;

constexpr const char* kFormatHelp = R"(Function sources (exactly one):
  --table FILE      truth-table file
  --anf TEXT -n N   algebraic normal form over x1..xN
  --fixture NAME    built-in function
  --random N        uniform random function (seeded by --function-seed)

Truth-table file:
  line 1: n=<int>            1 <= n <= 24
  line 2: 2^n characters '0'/'1', entry x at position x
      or: hex:<ceil(2^n/4) hex digits>; the first digit holds entries 0..3,
          entry 0 in its most significant bit; unused bits must be 0
  The input index x reads x1 as its most significant bit.

ANF grammar (whitespace ignored, XOR semantics, repeated monomials cancel):
  expression := term ('+' term)*
  term       := '0' | '1' | factor+
  factor     := 'x' integer          integer in [1, n]

Fixtures: paper-eq37 (x1+x2+x1x2+x2x3+x1x3), bent-n<even n>,
  linear-<bitstring a> (f(x) = a.x), zero-n<n>.

Vectors print with x1 leftmost.)";

struct SourceOptions {
    std::string table;
    std::string anf;
    std::string fixture;
    int vars = 0;
    int random_vars = 0;
    std::uint64_t function_seed = 0;
    CLI::Option* table_opt = nullptr;
    CLI::Option* anf_opt = nullptr;
    CLI::Option* fixture_opt = nullptr;
    CLI::Option* vars_opt = nullptr;
    CLI::Option* random_opt = nullptr;

    void attach(CLI::App* app) {
        table_opt = app->add_option("--table", table, "Truth-table file");
        anf_opt = app->add_option("--anf", anf, "ANF expression, e.g. 'x1+x2x3+1'");
        vars_opt = app->add_option("-n,--vars", vars, "Variable count for --anf");
        fixture_opt = app->add_option("--fixture", fixture, "Built-in fixture name");
        random_opt = app->add_option("--random", random_vars, "Random function on N variables");
        app->add_option("--function-seed", function_seed, "Seed for --random");
    }

    FunctionSource source() const {
        const int given = static_cast<int>(table_opt->count() > 0) + static_cast<int>(anf_opt->count() > 0) +
                          static_cast<int>(fixture_opt->count() > 0) + static_cast<int>(random_opt->count() > 0);
        if (given != 1)
            throw std::invalid_argument("exactly one of --table, --anf, --fixture, --random is required");
        FunctionSource s;
        if (table_opt->count()) {
            s.kind = FunctionSource::Kind::TruthTableFile;
            s.payload = table;
        } else if (anf_opt->count()) {
            s.kind = FunctionSource::Kind::AnfString;
            s.payload = anf;
            if (vars_opt->count()) s.vars = vars;
        } else if (fixture_opt->count()) {
            s.kind = FunctionSource::Kind::BuiltinFixture;
            s.payload = fixture;
        } else {
            s.kind = FunctionSource::Kind::Random;
            s.vars = random_vars;
            s.seed = function_seed;
        }
        return s;
    }
};

int parse_suffix_int(const std::string& name, const std::string& prefix) {
    const std::string digits = name.substr(prefix.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 3)
        throw std::invalid_argument("--fixture: malformed fixture name '" + name + "'");
    return std::stoi(digits);
}

std::string vector_line(Vec w, int n) { return to_bitstring(w, n); }

// spectrum

void print_spectrum(const WalshSpectrum& spectrum, bool by_magnitude, std::ostream& out) {
    const int n = spectrum.n();
    std::vector<Vec> order(spectrum.size());
    for (std::size_t w = 0; w < order.size(); ++w) order[w] = static_cast<Vec>(w);
    if (by_magnitude) {
        std::stable_sort(order.begin(), order.end(), [&](Vec a, Vec b) {
            return std::abs(spectrum[a]) > std::abs(spectrum[b]);
        });
    }
    out << "# w coeff S_f(w) decimal\n";
    char buf[64];
    for (Vec w : order) {
        const Rational s = spectrum.normalized(w);
        std::snprintf(buf, sizeof buf, "%.10g", s.to_double());
        out << vector_line(w, n) << ' ' << spectrum[w] << ' ' << s.str() << ' ' << buf << '\n';
    }
}

// exact

void print_exact(const BooleanFunction& f, std::ostream& out) {
    const int n = f.n();
    const WalshSpectrum spectrum = walsh_transform(f);
    const SpectralSupport support = spectral_support(spectrum);
    const StructureSets sets = spectral_linear_structures(support);
    const Prop3Dimensions dims = prop3_dimensions(spectrum);

    out << "n = " << n << '\n';
    out << "support: " << support.support.size() << " vectors, rank k = " << support.dimension << '\n';
    out << "prop1 (0 in support, so u1 is empty): " << (prop1_check(support) ? "true" : "false") << '\n';
    if (support.support.size() <= (std::size_t{1} << 16)) {
        const auto witness = prop2_check(support);
        out << "prop2 witness: ";
        if (witness)
            out << vector_line(witness->first, n) << " ^ " << vector_line(witness->second, n) << " = "
                << vector_line(witness->first ^ witness->second, n) << " (u1 is empty)\n";
        else
            out << "none\n";
    } else {
        out << "prop2 witness: skipped (support larger than 2^16)\n";
    }
    out << "prop3: dim u0 = n - k = " << dims.dim_u0 << ", u1 nonempty = " << (dims.u1_nonempty ? "true" : "false");
    if (dims.u1_nonempty) out << ", |u1| = |u0| = " << (std::uint64_t{1} << dims.dim_u0);
    out << '\n';
    out << "u0 = " << format_set(sets.u0) << '\n';
    out << "u1 = " << format_set(sets.u1) << '\n';
    out << "nonzero linear structure: " << (sets.has_nonzero() ? "yes" : "no") << '\n';
    if (n <= 16) {
        const StructureSets brute = brute_force_linear_structures(f);
        out << "definitional cross-check: " << (brute == sets ? "agree" : "MISMATCH") << '\n';
    }
}

// profile

void print_profile(const BooleanFunction& f, bool all, std::ostream& out) {
    const int n = f.n();
    const DifferentialProfile profile = differential_profile(f);
    const auto [a, i] = profile.witness();
    out << "n = " << n << '\n';
    out << "delta_f = " << format_rational(profile.delta()) << '\n';
    out << "witness: a = " << vector_line(a, n) << ", i = " << (i ? 1 : 0) << ", count = " << profile.max_count()
        << " of " << table_size(n) << '\n';
    if (all) {
        out << "# a count0 count1\n";
        for (std::uint64_t v = 0; v < table_size(n); ++v) {
            const DerivativeCounts c = profile.counts(static_cast<Vec>(v));
            out << vector_line(static_cast<Vec>(v), n) << ' ' << c.count0 << ' ' << c.count1 << '\n';
        }
    }
}

}  // namespace

BooleanFunction builtin_fixture(const std::string& name) {
    if (name == "paper-eq37") return anf_to_function(parse_anf("x1+x2+x1x2+x2x3+x1x3", 3));
    if (name.rfind("bent-n", 0) == 0) {
        const int n = parse_suffix_int(name, "bent-n");
        if (n % 2 != 0 || n < 2 || n > kMaxVars)
            throw std::invalid_argument("--fixture: bent fixtures need an even n in [2, 24], got '" + name + "'");
        return make_inner_product_bent(n);
    }
    if (name.rfind("zero-n", 0) == 0) {
        const int n = parse_suffix_int(name, "zero-n");
        if (n < 1 || n > kMaxVars) throw std::invalid_argument("--fixture: n out of range in '" + name + "'");
        return BooleanFunction(n);
    }
    if (name.rfind("linear-", 0) == 0) {
        const std::string bits = name.substr(7);
        const int n = static_cast<int>(bits.size());
        if (n < 1 || n > kMaxVars) throw std::invalid_argument("--fixture: bad linear vector in '" + name + "'");
        try {
            return make_linear(n, parse_bitstring(bits, n));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("--fixture: bad linear vector in '" + name + "'");
        }
    }
    throw std::invalid_argument("--fixture: unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
    return {"paper-eq37", "bent-n2", "bent-n4", "bent-n6", "bent-n8", "linear-<bits>", "zero-n<n>"};
}

BooleanFunction resolve(const FunctionSource& source) {
    switch (source.kind) {
        case FunctionSource::Kind::TruthTableFile:
            try {
                return read_truth_table_file(source.payload);
            } catch (const std::exception& e) {
                throw std::invalid_argument(std::string("--table: ") + e.what());
            }
        case FunctionSource::Kind::AnfString: {
            if (!source.vars) throw std::invalid_argument("-n: required with --anf");
            if (*source.vars < 1 || *source.vars > kMaxVars)
                throw std::invalid_argument("-n: variable count must lie in [1, 24]");
            try {
                return anf_to_function(parse_anf(source.payload, *source.vars));
            } catch (const AnfParseError& e) {
                throw std::invalid_argument(std::string("--anf: ") + e.what());
            }
        }
        case FunctionSource::Kind::BuiltinFixture:
            return builtin_fixture(source.payload);
        case FunctionSource::Kind::Random:
            if (!source.vars || *source.vars < 1 || *source.vars > kMaxVars)
                throw std::invalid_argument("--random: variable count must lie in [1, 24]");
            return random_function(*source.vars, source.seed);
    }
    throw std::logic_error("unhandled function source");
}

std::vector<CheckResult> consistency_checks(const BooleanFunction& f) {
    const int n = f.n();
    if (n > 12) throw std::invalid_argument("check: exhaustive identities are limited to n <= 12");
    const std::uint64_t size = f.size();
    std::vector<CheckResult> results;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        results.push_back({std::move(name), ok, std::move(detail)});
    };

    const WalshSpectrum spectrum = walsh_transform(f);
    add("parseval", spectrum.energy() == std::int64_t{1} << (2 * n), "sum coeff^2 = " + std::to_string(spectrum.energy()));

    bool fast_ok = walsh_transform_serial(f) == spectrum;
    for (std::uint64_t w = 0; w < size && fast_ok; ++w)
        fast_ok = walsh_value_naive(f, static_cast<Vec>(w)) == spectrum[static_cast<Vec>(w)];
    add("fast_transform_vs_naive", fast_ok);

    bool lemma_ok = true;
    for (std::uint64_t a = 0; a < size && lemma_ok; ++a) {
        std::int64_t signed_energy = 0;
        for (std::uint64_t w = 0; w < size; ++w) {
            const std::int64_t sq = std::int64_t{spectrum[static_cast<Vec>(w)]} * spectrum[static_cast<Vec>(w)];
            signed_energy += dot(static_cast<Vec>(w), static_cast<Vec>(a)) ? -sq : sq;
        }
        lemma_ok = (correlation(f, static_cast<Vec>(a)) << n) == signed_energy;
    }
    add("lemma1_correlation", lemma_ok);

    bool t1_ok = true;
    for (std::uint64_t a = 0; a < size && t1_ok; ++a)
        for (bool i : {false, true}) t1_ok = t1_ok && theorem1_check(f, spectrum, static_cast<Vec>(a), i).holds();
    add("theorem1_identity", t1_ok);

    const StructureSets spectral = spectral_linear_structures(spectrum);
    const StructureSets brute = brute_force_linear_structures(f);
    add("structures_spectral_vs_definition", spectral == brute);

    const DifferentialProfile profile = differential_profile(f, spectrum);
    add("profile_spectral_vs_enumeration", profile == differential_profile_naive(f));

    const bool delta_one = profile.delta() == Rational(1);
    add("delta_one_iff_nonzero_structure", delta_one == brute.has_nonzero(),
        "delta_f = " + format_rational(profile.delta()));

    const SpectralSupport support = spectral_support(spectrum);
    const Prop3Dimensions dims = prop3_dimensions(spectrum);
    const std::uint64_t expected = std::uint64_t{1} << (n - dims.rank);
    add("prop3_cardinalities",
        brute.u0.cardinality() == expected && dims.dim_u0 == n - dims.rank &&
            (brute.u1.cardinality() == 0 || brute.u1.cardinality() == expected) &&
            dims.u1_nonempty == !brute.u1.empty(),
        "k = " + std::to_string(dims.rank));

    bool implications = true;
    if (prop1_check(support) && !brute.u1.empty()) implications = false;
    if (support.support.size() <= (std::size_t{1} << 16) && prop2_check(support) && !brute.u1.empty())
        implications = false;
    add("prop1_prop2_imply_empty_u1", implications);

    std::vector<Vec> members = brute.u0.elements();
    const std::vector<Vec> u1 = brute.u1.elements();
    members.insert(members.end(), u1.begin(), u1.end());
    bool closed = brute.u0.contains(0);
    for (std::size_t j = 0; j < members.size() && closed; ++j)
        for (std::size_t k = j; k < members.size() && closed; ++k) {
            const Vec s = members[j] ^ members[k];
            closed = brute.u0.contains(s) || brute.u1.contains(s);
        }
    add("structures_closed_under_xor", closed);
    return results;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and sampled linear structures of Boolean functions", "bvls"};
    app.footer(kFormatHelp);
    app.require_subcommand(1);

    SourceOptions spectrum_src, exact_src, sample_src, alg_src, profile_src, check_src;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the Walsh spectrum");
    spectrum_src.attach(spectrum_cmd);
    std::string sort_order = "index";
    spectrum_cmd->add_option("--sort", sort_order, "index | magnitude")
        ->check(CLI::IsMember({"index", "magnitude"}));

    auto* exact_cmd = app.add_subcommand("exact", "Exact linear structures and support diagnostics");
    exact_src.attach(exact_cmd);

    auto* sample_cmd = app.add_subcommand("sample", "Simulated Bernstein-Vazirani measurements");
    sample_src.attach(sample_cmd);
    std::uint64_t sample_seed = 0;
    std::int64_t sample_count = 1;
    sample_cmd->add_option("--seed", sample_seed, "Sampler seed");
    sample_cmd->add_option("--count", sample_count, "Number of runs");

    auto* alg_cmd = app.add_subcommand("algorithm1", "Iterated sampling with GF(2) solving; JSON report");
    alg_src.attach(alg_cmd);
    int rounds = 0;
    std::uint64_t alg_seed = 0;
    double epsilon = 0.0;
    bool audit = false;
    auto* rounds_opt = alg_cmd->add_option("--rounds", rounds, "Maximum rounds r (default n^2)");
    alg_cmd->add_option("--seed", alg_seed, "Sampler seed");
    auto* epsilon_opt = alg_cmd->add_option("--epsilon", epsilon, "Accuracy parameter (default m^-1/2)");
    alg_cmd->add_flag("--audit", audit, "Audit every reported vector against the truth table (n <= 16)");

    auto* profile_cmd = app.add_subcommand("profile", "Differential profile and delta_f");
    profile_src.attach(profile_cmd);
    bool profile_all = false;
    profile_cmd->add_flag("--all", profile_all, "Print counts for every a");

    auto* check_cmd = app.add_subcommand("check", "Run every identity on one function (n <= 12)");
    check_src.attach(check_cmd);

    if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
        const auto subs = app.get_subcommands([](CLI::App*) { return true; });
        const bool known = std::any_of(subs.begin(), subs.end(),
                                       [&](const CLI::App* s) { return s->get_name() == args.front(); });
        if (!known) {
            err << "error: unknown subcommand '" << args.front()
                << "' (expected spectrum, exact, sample, algorithm1, profile or check)\n";
            return kInputError;
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (spectrum_cmd->parsed()) {
            print_spectrum(walsh_transform(resolve(spectrum_src.source())), sort_order == "magnitude", out);
        } else if (exact_cmd->parsed()) {
            print_exact(resolve(exact_src.source()), out);
        } else if (sample_cmd->parsed()) {
            if (sample_count < 1) throw std::invalid_argument("--count: must be at least 1");
            BvSampler sampler(walsh_transform(resolve(sample_src.source())), sample_seed);
            const int n = sampler.n();
            for (Vec w : sampler.sample_batch(static_cast<std::size_t>(sample_count))) out << to_bitstring(w, n) << '\n';
        } else if (alg_cmd->parsed()) {
            const BooleanFunction f = resolve(alg_src.source());
            if (rounds_opt->count() && rounds < 1) throw std::invalid_argument("--rounds: must be at least 1");
            if (epsilon_opt->count() && !(epsilon > 0.0 && epsilon <= 1.0))
                throw std::invalid_argument("--epsilon: must lie in (0, 1]");
            if (audit && f.n() > 16) throw std::invalid_argument("--audit: only available for n <= 16");
            const int r = rounds_opt->count() ? rounds : f.n() * f.n();
            const StructureReport report =
                run_algorithm1(f, r, alg_seed, epsilon_opt->count() ? std::optional<double>(epsilon) : std::nullopt);
            std::vector<AuditEntry> entries;
            if (audit) entries = audit_report(f, report);
            out << report_json(report, audit ? &entries : nullptr).dump(2) << '\n';
        } else if (profile_cmd->parsed()) {
            print_profile(resolve(profile_src.source()), profile_all, out);
        } else if (check_cmd->parsed()) {
            const BooleanFunction f = resolve(check_src.source());
            if (f.n() > 12) throw std::invalid_argument("check: function has n > 12");
            bool all_ok = true;
            for (const CheckResult& r : consistency_checks(f)) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name;
                if (!r.detail.empty()) out << "  [" << r.detail << ']';
                out << '\n';
                all_ok = all_ok && r.passed;
            }
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return 0;
}

}  // namespace bvls::cli
