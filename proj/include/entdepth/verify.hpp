#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entdepth {

struct SuiteResult {
    std::string name;
    int checks = 0;
    int violations = 0;
    std::vector<std::string> messages;  // one line per violation, capped
    bool ok() const { return violations == 0; }

    void pass() { ++checks; }
    void fail(const std::string& msg);
};

/// Order-theory checks: antisymmetry, transitivity, refinement implies
/// dominance, cover closures match the full relations, conjugation is an
/// antiautomorphism of dominance.
SuiteResult run_suite_orders(int n_max);

/// Refinement- and dominance-monotonicity of the whole generator catalog
/// over parameter grids; optionally includes the documented out-of-range
/// counterexamples, which are expected to violate.
SuiteResult run_suite_monotonicity(int n_max, bool include_counterexamples);

/// Parameter-limit checks at q = +-50 against the closed limit forms with
/// absolute tolerance 1e-6, plus monotonicity in q over a grid.
SuiteResult run_suite_limits(int n8 = 8);

/// Brute-force bound curves against the closed forms, the weak product
/// bound, bound monotonicity, witness structure, and the dominance
/// strictness mechanism.
SuiteResult run_suite_bounds(int n_max);

/// Fisher-information checks: pure-state attainability, variance
/// additivity, the variance range bound, convexity and random-decomposition
/// upper bounds.
SuiteResult run_suite_qfi(int n_max, std::uint64_t seed);

}  // namespace entdepth
