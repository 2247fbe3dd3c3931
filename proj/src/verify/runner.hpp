#pragma once

#include "exact/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace yso3 {

/// One seeded coefficient perturbation: suite names the pipeline stage the
/// target lives in, target a series or matrix there, index the exponent
/// (series targets) or the flat entry (matrix targets). Operator-series
/// coefficients are perturbed at matrix entry (0,0).
struct Mutation {
    std::string suite;
    std::string target;
    int index = 0;
    Rational delta;
};

/// Parses "suite:target:index:delta", e.g. "gauss:kMinus1:1:+1".
Mutation parse_mutation(const std::string& text);

struct RunConfig {
    int order = 8;
    int depth = 2;
    std::vector<Rational> points = {Rational(0), Rational(1, 3)};
    std::vector<std::string> suites = {"all"};
    std::string format = "json";
    std::optional<Mutation> mutation;
    std::uint64_t seed = 0;
    int mode_bound = 6;
    bool timings = false;
};

struct CheckRecord {
    std::string id;
    std::string statement;
    std::string params;
    std::string verdict;  // PASS | FAIL | SKIP
    std::string failure;  // first-failure coordinates when FAIL
    std::string note;     // oracle agreement, skip reason, reported scalars
    long elapsed_ms = 0;
};

struct Report {
    RunConfig config;
    std::vector<CheckRecord> records;
    int total = 0, passed = 0, failed = 0, skipped = 0;

    std::string render(const std::string& format) const;
    std::string render_json() const;
    std::string render_text() const;
};

/// Validates the configuration (throws std::invalid_argument on errors) and
/// executes the selected suites. Identity failures are recorded in the
/// report, not thrown.
Report run_suites(const RunConfig& config);

/// Canonical suite names, in execution order (excluding "all").
const std::vector<std::string>& suite_names();

} // namespace yso3
