#pragma once

#include <cstdint>
#include <vector>

#include "collatz/natural.hpp"

namespace collatz {

// Number of consecutive 1-bits at the low end.
std::uint64_t trailing_ones(const Natural& n);

// Largest k with 2^k | n.
std::uint64_t trailing_zeros(const Natural& n);

// Compressed odd step (3n+1)/2; throws std::domain_error on even input.
Natural t3(const Natural& n);

constexpr double kLog2ThreeHalves = 0.5849625007211562;  // log2(3/2)
constexpr double kLog2ThreeQuarters = -0.4150374992788438;  // log2(3/4)

struct BlockRecord {
    std::uint64_t to_count;  // trailing ones consumed by the multiplicative phase
    std::uint64_t tz_count;  // trailing zeros consumed by the divisive phase
    Natural n_start;
    Natural n_prime;         // value after the multiplicative phase
};

struct BlockTrace {
    std::vector<BlockRecord> blocks;
    std::uint64_t classical_steps = 0;  // sum over blocks of 2*to + tz
    bool truncated = false;
};

// Alternating multiplicative/divisive decomposition of the orbit of odd n.
BlockTrace block_decompose(const Natural& n, std::uint64_t step_budget = 100000);

struct DriftSample {
    Natural n;
    double w;
};

// w(n) = to(n)*log2(3/2) - tz(T3^{to(n)}(n)) for odd n.
DriftSample drift(const Natural& n);

// f(n) = log2(n)/log2(n0) + to(n) - tz(n); throws std::domain_error for n0 < 2.
double energy(const Natural& n, const Natural& n0);

struct EnergyDelta {
    std::uint64_t n;
    double delta_f;
};

struct EnergyReport {
    std::vector<EnergyDelta> samples;     // every odd n in [3, range_max]
    std::uint64_t violation_count = 0;    // entries with delta_f >= 0
};

// Blockwise energy change f(T3^{to(n)}(n), n0=n) - f(n, n0=n) over odd n.
EnergyReport energy_descent_scan(std::uint64_t range_max);

struct BitGrowth {
    std::uint64_t beta_in;
    std::uint64_t beta_out;
    bool ok;  // beta(3n+1) <= beta(n) + 2
};

BitGrowth bit_growth_check(const Natural& n);

struct OrbitMetrics {
    std::uint64_t t_end = 0;    // steps to reach 1
    std::uint64_t l_peak = 1;   // max decimal digit count over the orbit
    std::uint64_t t_peak = 0;   // first step attaining l_peak
    std::uint64_t l_end = 1;    // digit count of the terminal value
    bool t_eff_defined = false;
    double t_eff = 0.0;         // (t_end - t_peak)/(l_peak - l_end)
    bool constraint_holds = false;  // t_peak <= 2*(l_peak - 1), reported only
    bool truncated = false;
};

OrbitMetrics orbit_metrics(const Natural& n, std::uint64_t step_budget = 100000);

struct BitRow {
    std::uint64_t step;
    Natural value;
    std::string bits;
    std::uint64_t bit_count;
    std::uint64_t tz;
};

struct BitTable {
    std::vector<BitRow> rows;
    bool truncated = false;
};

BitTable bit_table(const Natural& n, std::uint64_t step_budget = 100000);

}  // namespace collatz
