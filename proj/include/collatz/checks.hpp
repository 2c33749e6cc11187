#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace collatz {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool report_only = false;  // informational line, excluded from exit status
    std::string detail;
};

struct CheckConfig {
    std::uint64_t oracle_limit = 1'000'000;    // digitwise vs direct map
    std::uint64_t terminal_limit = 100'000;    // full orbits to 1
    std::uint64_t drift_limit = 1'000'000;     // odd n for drift statistics
    std::uint64_t bit_growth_limit = 1'000'000;
    std::uint64_t energy_limit = 10'000;
    std::uint64_t block_limit = 100'000;       // block/step identity
    std::uint64_t metrics_limit = 10'000;      // peak-constraint report
    std::uint64_t affine_limit = 100'000;      // odd a in [5,49]
    std::filesystem::path reference_table;
    unsigned threads = 0;                      // 0 = machine parallelism
};

// Digitwise step equals the direct map on [1, limit]; also tracks the largest
// carry seen (bounded-carry claim rides on the same scan).
struct OracleScanOutcome {
    std::uint64_t mismatches = 0;
    std::uint64_t first_mismatch = 0;
    int max_carry = 0;
    double seconds = 0.0;
};
OracleScanOutcome scan_oracle_equivalence(std::uint64_t limit, unsigned threads);

CheckResult check_oracle_equivalence(const CheckConfig& cfg);
CheckResult check_table_exactness(const CheckConfig& cfg);
CheckResult check_carry_bound(const CheckConfig& cfg);
CheckResult check_terminal_behavior(const CheckConfig& cfg);
CheckResult check_drift_statistics(const CheckConfig& cfg);
CheckResult check_worst_case_drift(const CheckConfig& cfg);
CheckResult check_bit_growth(const CheckConfig& cfg);
CheckResult check_energy_descent(const CheckConfig& cfg);
CheckResult check_block_identity(const CheckConfig& cfg);
CheckResult check_worked_examples(const CheckConfig& cfg);
CheckResult check_affine_scan(const CheckConfig& cfg);
CheckResult check_peak_constraint_report(const CheckConfig& cfg);
CheckResult check_property_suites(const CheckConfig& cfg);

// The thirteen acceptance checks in order.
std::vector<CheckResult> run_acceptance(const CheckConfig& cfg);

// Invariant suites at user-selected limits. Checks of claims known to fail
// (the 2^k - 1 drift bound) are included as report-only lines.
std::vector<CheckResult> run_verification(const CheckConfig& cfg);

}  // namespace collatz
