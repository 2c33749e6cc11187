#pragma once

#include <cstdint>
#include <vector>

#include "collatz/natural.hpp"

namespace collatz {

struct AffineParams {
    Natural a = 1;
    Natural b = 0;
};

struct AffineStepInfo {
    Natural value;
    Natural max_carry;  // largest intermediate carry observed
};

// Single-phase digitwise a*n + b; valid only for a < 10 and b < 10
// (throws std::domain_error otherwise).
Natural affine_step_simple(const Natural& n, const AffineParams& params);
AffineStepInfo affine_step_simple_info(const Natural& n, const AffineParams& params);

// Two-phase digitwise a*n + b: multiply with carry, then add b digitwise.
// Correct for all a, b.
Natural affine_step_two_phase(const Natural& n, const AffineParams& params);
AffineStepInfo affine_step_two_phase_info(const Natural& n, const AffineParams& params);

// floor((9a + b)/10).
Natural carry_bound(const AffineParams& params);

// Generalized block drift to(n)*log2(a/2) - tz(v) with v the result of to(n)
// applications of v -> floor((a*v + 1)/2). Exact halving for a = 3, where this
// coincides with drift(). Throws std::domain_error for even a or even n.
double drift_general(const Natural& n, std::uint64_t a);

struct DriftScanRow {
    std::uint64_t a;
    double empirical_mean;
    double theoretical_mean;  // 2*log2(a/2) - 2
    std::uint64_t sample_count;
};

// Mean of drift_general over odd n in [3, n_limit] for each multiplier.
std::vector<DriftScanRow> drift_scan(const std::vector<std::uint64_t>& a_values,
                                     std::uint64_t n_limit, unsigned threads = 0);

}  // namespace collatz
