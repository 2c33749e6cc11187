#include "collatz/blocks.hpp"

#include <cmath>

#include "doctest.h"

using namespace collatz;

namespace {

std::uint64_t simulate_steps(std::uint64_t n) {
    // From 1 the orbit still runs the loop 1 -> 4 -> 2 -> 1 once (3 steps),
    // matching what a single block describes.
    std::uint64_t steps = 0;
    do {
        n = (n % 2 == 0) ? n / 2 : 3 * n + 1;
        ++steps;
    } while (n != 1);
    return steps;
}

// Independent recomputation of the one-block drift, used as the second route
// of the two-path agreement property.
double drift_by_simulation(std::uint64_t n) {
    std::uint64_t to = 0;
    std::uint64_t v = n;
    while (v % 2 == 1) {
        v = (3 * v + 1) / 2;
        ++to;
    }
    std::uint64_t tz = 0;
    while (v % 2 == 0) {
        v /= 2;
        ++tz;
    }
    return static_cast<double>(to) * std::log2(1.5) - static_cast<double>(tz);
}

}  // namespace

TEST_CASE("trailing ones") {
    CHECK(trailing_ones(15) == 4);
    CHECK(trailing_ones(5) == 1);
    CHECK(trailing_ones(2) == 0);
    CHECK_THROWS_AS(trailing_ones(0), std::domain_error);
}

TEST_CASE("trailing zeros") {
    CHECK(trailing_zeros(160) == 5);
    CHECK(trailing_zeros(80) == 4);
    CHECK(trailing_zeros(1) == 0);
    CHECK_THROWS_AS(trailing_zeros(0), std::domain_error);
}

TEST_CASE("t3") {
    CHECK(t3(15) == 23);
    CHECK(t3(53) == 80);
    CHECK(t3(1) == 2);
    CHECK_THROWS_AS(t3(4), std::domain_error);
}

TEST_CASE("block decomposition of 15 and 1") {
    const BlockTrace t15 = block_decompose(15);
    REQUIRE(t15.blocks.size() == 2);
    CHECK(t15.blocks[0].to_count == 4);
    CHECK(t15.blocks[0].tz_count == 4);
    CHECK(t15.blocks[0].n_start == 15);
    CHECK(t15.blocks[0].n_prime == 80);
    CHECK(t15.blocks[1].to_count == 1);
    CHECK(t15.blocks[1].tz_count == 3);
    CHECK(t15.classical_steps == 17);
    CHECK(!t15.truncated);

    const BlockTrace t1 = block_decompose(1);
    REQUIRE(t1.blocks.size() == 1);
    CHECK(t1.blocks[0].to_count == 1);
    CHECK(t1.blocks[0].tz_count == 1);
    CHECK(t1.classical_steps == 3);

    CHECK_THROWS_AS(block_decompose(6), std::domain_error);
}

TEST_CASE("block/orbit step identity") {
    for (std::uint64_t n = 1; n <= 20001; n += 2) {
        CHECK(block_decompose(Natural(n)).classical_steps == simulate_steps(n));
    }
}

TEST_CASE("drift worked values") {
    CHECK(drift(15).w == doctest::Approx(-1.660150).epsilon(1e-6));
    CHECK(drift(1).w == doctest::Approx(kLog2ThreeQuarters).epsilon(1e-9));
    CHECK(drift(3).w == doctest::Approx(-1.830075).epsilon(1e-6));
    CHECK_THROWS_AS(drift(4), std::domain_error);
}

TEST_CASE("drift agrees with an independent block simulation") {
    for (std::uint64_t n = 1; n <= 20001; n += 2) {
        CHECK(drift(Natural(n)).w == doctest::Approx(drift_by_simulation(n)).epsilon(1e-12));
    }
}

TEST_CASE("drift of the all-ones family follows the 2-adic law") {
    // tz(3^k - 1) is 1 for odd k and 2 + tz(k) for even k, which pins
    // w(2^k - 1) exactly; the claimed bound k*log2(3/4) holds only at k=2,4.
    for (std::uint64_t k = 2; k <= 20; ++k) {
        const Natural n = (Natural(1) << static_cast<unsigned>(k)) - 1;
        const std::uint64_t tz_expected =
            (k % 2 == 1) ? 1 : 2 + trailing_zeros(Natural(k));
        const double expected =
            static_cast<double>(k) * kLog2ThreeHalves - static_cast<double>(tz_expected);
        CHECK(drift(n).w == doctest::Approx(expected).epsilon(1e-9));
        const bool bound_holds = drift(n).w <= static_cast<double>(k) * kLog2ThreeQuarters + 1e-9;
        CHECK(bound_holds == (k == 2 || k == 4));
    }
}

TEST_CASE("energy worked values and domain") {
    CHECK(energy(15, 15) == doctest::Approx(5.0));
    CHECK(energy(1, 2) == doctest::Approx(1.0));
    CHECK(energy(16, 16) == doctest::Approx(-3.0));
    CHECK_THROWS_AS(energy(5, 1), std::domain_error);
}

TEST_CASE("energy descent scan reports zero violations at desk scale") {
    const EnergyReport report = energy_descent_scan(10000);
    CHECK(report.samples.size() == 4999);
    CHECK(report.violation_count == 0);

    // Named deltas.
    const auto find = [&](std::uint64_t n) {
        for (const auto& s : report.samples) {
            if (s.n == n) return s.delta_f;
        }
        return 1.0;
    };
    CHECK(find(15) == doctest::Approx(-7.381852).epsilon(1e-5));
    CHECK(find(3) < 0.0);
    CHECK_THROWS_AS(energy_descent_scan(2), std::domain_error);
}

TEST_CASE("bit growth bound") {
    const BitGrowth g23 = bit_growth_check(23);
    CHECK(g23.beta_in == 5);
    CHECK(g23.beta_out == 7);
    CHECK(g23.ok);

    const BitGrowth g1 = bit_growth_check(1);
    CHECK(g1.beta_in == 1);
    CHECK(g1.beta_out == 3);
    CHECK(g1.ok);

    const BitGrowth g53 = bit_growth_check(53);
    CHECK(g53.beta_in == 6);
    CHECK(g53.beta_out == 8);
    CHECK(g53.ok);

    for (std::uint64_t n = 1; n <= 100001; n += 2) {
        CHECK(bit_growth_check(Natural(n)).ok);
    }
}

TEST_CASE("halving reduces tz and bit length by exactly one") {
    for (std::uint64_t n = 2; n <= 4096; n += 2) {
        const Natural v(n);
        const Natural half = v >> 1;
        CHECK(trailing_zeros(v) == trailing_zeros(half) + 1);
        CHECK(bit_length(v) == bit_length(half) + 1);
    }
}

TEST_CASE("orbit metrics for the worked orbit") {
    const OrbitMetrics m = orbit_metrics(23);
    CHECK(m.t_end == 15);
    CHECK(m.l_peak == 3);
    CHECK(m.t_peak == 3);  // 106 at step 3 is the first 3-digit value
    CHECK(m.l_end == 1);
    REQUIRE(m.t_eff_defined);
    CHECK(m.t_eff == doctest::Approx(6.0));
    CHECK(m.constraint_holds);
    CHECK(!m.truncated);
}

TEST_CASE("orbit metrics degenerate and long cases") {
    const OrbitMetrics m1 = orbit_metrics(1);
    CHECK(m1.t_end == 0);
    CHECK(m1.l_peak == 1);
    CHECK(!m1.t_eff_defined);
    CHECK(m1.constraint_holds);

    CHECK(orbit_metrics(27).t_end == 111);

    const OrbitMetrics trunc = orbit_metrics(27, 10);
    CHECK(trunc.truncated);
}

TEST_CASE("bit table of 23 and 1") {
    const BitTable t = bit_table(23);
    REQUIRE(t.rows.size() == 16);
    CHECK(t.rows[5].step == 5);
    CHECK(t.rows[5].value == 160);
    CHECK(t.rows[5].bits == "10100000");
    CHECK(t.rows[5].bit_count == 8);
    CHECK(t.rows[5].tz == 5);
    CHECK(t.rows.back().value == 1);

    const BitTable t1 = bit_table(1);
    REQUIRE(t1.rows.size() == 1);
    CHECK(t1.rows[0].bits == "1");
    CHECK(t1.rows[0].tz == 0);
}
