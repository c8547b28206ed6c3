#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "wirtinger/jet.hpp"
#include "wirtinger/optimize.hpp"

namespace wirtinger::cli {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;     // check residual >= tol, or descent hit max_iter
inline constexpr int kExitSyntax = 2;     // malformed expression, literal, flag or data file
inline constexpr int kExitDomain = 3;     // DomainError, PoleError, UnsupportedPrimitive
inline constexpr int kExitDiverged = 4;   // Diverged or NonRealCost

/// JSON body plus exit code. Every number in `body` is finite and the top level carries "schema": 1.
struct CliReport {
    json body;
    int exit_code = kExitOk;
};

struct DiffOptions {
    std::string expr;
    Complex at{};
    int order = 1;
};

struct CheckOptions {
    std::string expr;
    std::optional<Complex> at;   // drawn from `seed` when absent
    real step = kDefaultFdStep;
    real tol = 1e-6;
    std::uint64_t seed = 0;
};

struct ClassifyOptions {
    std::string expr;
    std::optional<Complex> at;
    real step = kDefaultFdStep;
    real tol = kDefaultClassifyTol;
    std::uint64_t seed = 0;
};

struct MinimizeOptions {
    std::optional<std::string> expr;       // scalar cost, or
    std::optional<std::string> data_path;  // least-squares data file
    bool widely_linear = false;
    std::optional<Complex> from;           // scalar start (default 0)
    std::optional<std::string> from_vector;  // JSON array of [re, im] pairs (default zeros)
    std::optional<real> mu;                // default 0.1, or 1/sum|x_k|^2 for data files
    real tol = 1e-8;
    int max_iter = 1000;
    bool backtrack = false;
    std::optional<std::string> trace_path;  // JSON-lines trace output
    std::ostream* trace_stream = nullptr;   // same lines, e.g. to stderr for diagnostics
};

CliReport cmd_diff(const DiffOptions& opts);
CliReport cmd_check(const CheckOptions& opts);
CliReport cmd_classify(const ClassifyOptions& opts);
CliReport cmd_minimize(const MinimizeOptions& opts);

/// Point used when --at is omitted: uniform on [-1, 1]^2 from a seeded mt19937_64.
Complex sample_point(std::uint64_t seed);

/// Error report for an exception escaping a command, with the matching exit code.
CliReport error_report(const std::string& command, const std::exception& e);

} // namespace wirtinger::cli
