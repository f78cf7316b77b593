#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bvls/boolfn.hpp"

namespace bvls::cli {

/// Where the analyzed function comes from; exactly one source per invocation.
struct FunctionSource {
    enum class Kind { TruthTableFile, AnfString, BuiltinFixture, Random };

    Kind kind = Kind::BuiltinFixture;
    std::string payload;          // path, ANF text, or fixture name
    std::optional<int> vars;      // -n for ANF and random sources
    std::uint64_t seed = 0;       // random sources
};

/// Registry: "paper-eq37", "bent-n<even n>", "linear-<bitstring>", "zero-n<n>".
BooleanFunction builtin_fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// Throws std::invalid_argument with a message naming the offending flag.
BooleanFunction resolve(const FunctionSource& source);

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Every spectral and structural identity, evaluated on one function (n <= 12).
std::vector<CheckResult> consistency_checks(const BooleanFunction& f);

/// Entry point for the command line; args excludes the program name.
/// Returns 0 for completed analyses, 1 if a consistency check fails, and
/// 2 (or the CLI11 code) for input errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bvls::cli
