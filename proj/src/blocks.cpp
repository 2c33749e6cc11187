#include "collatz/blocks.hpp"

#include <cmath>
#include <stdexcept>

namespace collatz {

std::uint64_t trailing_ones(const Natural& n) {
    if (n < 1) throw std::domain_error("trailing_ones requires n >= 1");
    // The low 1-run of n is the low 0-run of n+1.
    return trailing_zeros(n + 1);
}

std::uint64_t trailing_zeros(const Natural& n) {
    if (n < 1) throw std::domain_error("trailing_zeros requires n >= 1");
    return boost::multiprecision::lsb(n);
}

Natural t3(const Natural& n) {
    if (n < 1 || is_even(n)) throw std::domain_error("t3 requires odd n >= 1");
    return (3 * n + 1) >> 1;
}

BlockTrace block_decompose(const Natural& n, std::uint64_t step_budget) {
    if (n < 1 || is_even(n)) throw std::domain_error("block_decompose requires odd n >= 1");

    // At least one block runs even from n = 1 (its orbit is 1 -> 4 -> 2 -> 1).
    BlockTrace trace;
    Natural v = n;
    do {
        BlockRecord rec;
        rec.n_start = v;
        rec.to_count = trailing_ones(v);
        for (std::uint64_t i = 0; i < rec.to_count; ++i) v = t3(v);
        rec.n_prime = v;
        rec.tz_count = trailing_zeros(v);
        v >>= static_cast<unsigned>(rec.tz_count);
        trace.classical_steps += 2 * rec.to_count + rec.tz_count;
        trace.blocks.push_back(std::move(rec));
        if (trace.classical_steps > step_budget) {
            trace.truncated = true;
            break;
        }
    } while (v != 1);
    return trace;
}

DriftSample drift(const Natural& n) {
    if (n < 1 || is_even(n)) throw std::domain_error("drift requires odd n >= 1");
    const std::uint64_t to = trailing_ones(n);
    Natural v = n;
    for (std::uint64_t i = 0; i < to; ++i) v = t3(v);
    return DriftSample{n, static_cast<double>(to) * kLog2ThreeHalves -
                              static_cast<double>(trailing_zeros(v))};
}

double energy(const Natural& n, const Natural& n0) {
    if (n < 1) throw std::domain_error("energy requires n >= 1");
    if (n0 < 2) throw std::domain_error("energy requires n0 >= 2");
    const double ratio = (n == 1) ? 0.0 : log2_natural(n) / log2_natural(n0);
    return ratio + static_cast<double>(trailing_ones(n)) -
           static_cast<double>(trailing_zeros(n));
}

EnergyReport energy_descent_scan(std::uint64_t range_max) {
    if (range_max < 3) throw std::domain_error("energy_descent_scan requires range_max >= 3");
    EnergyReport report;
    for (std::uint64_t n = 3; n <= range_max; n += 2) {
        const Natural start(n);
        const std::uint64_t to = trailing_ones(start);
        Natural v = start;
        for (std::uint64_t i = 0; i < to; ++i) v = t3(v);
        const double delta = energy(v, start) - energy(start, start);
        report.samples.push_back(EnergyDelta{n, delta});
        if (delta >= 0.0) ++report.violation_count;
    }
    return report;
}

BitGrowth bit_growth_check(const Natural& n) {
    if (n < 1 || is_even(n)) throw std::domain_error("bit_growth_check requires odd n >= 1");
    BitGrowth g;
    g.beta_in = bit_length(n);
    g.beta_out = bit_length(3 * n + 1);
    g.ok = g.beta_out <= g.beta_in + 2;
    return g;
}

namespace {

std::uint64_t decimal_digit_count(const Natural& n) {
    return to_digits(n).size();
}

}  // namespace

OrbitMetrics orbit_metrics(const Natural& n, std::uint64_t step_budget) {
    if (n < 1) throw std::domain_error("orbit_metrics requires n >= 1");

    OrbitMetrics m;
    m.l_peak = decimal_digit_count(n);
    m.t_peak = 0;
    Natural v = n;
    while (v != 1) {
        if (m.t_end >= step_budget) {
            m.truncated = true;
            return m;
        }
        v = collatz_t(v);
        ++m.t_end;
        const std::uint64_t digits = decimal_digit_count(v);
        if (digits > m.l_peak) {
            m.l_peak = digits;
            m.t_peak = m.t_end;
        }
    }
    m.l_end = 1;
    if (m.l_peak > m.l_end) {
        m.t_eff_defined = true;
        m.t_eff = static_cast<double>(m.t_end - m.t_peak) /
                  static_cast<double>(m.l_peak - m.l_end);
    }
    m.constraint_holds = m.t_peak <= 2 * (m.l_peak - 1);
    return m;
}

BitTable bit_table(const Natural& n, std::uint64_t step_budget) {
    if (n < 1) throw std::domain_error("bit_table requires n >= 1");
    BitTable table;
    Natural v = n;
    std::uint64_t step = 0;
    while (true) {
        table.rows.push_back(BitRow{step, v, to_bit_string(v), bit_length(v),
                                    trailing_zeros(v)});
        if (v == 1) break;
        if (step >= step_budget) {
            table.truncated = true;
            break;
        }
        v = collatz_t(v);
        ++step;
    }
    return table;
}

}  // namespace collatz
