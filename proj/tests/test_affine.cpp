#include "collatz/affine.hpp"

#include <cmath>

#include "doctest.h"
#include "collatz/blocks.hpp"
#include "collatz/symbolic.hpp"

using namespace collatz;

TEST_CASE("simple rule worked values") {
    CHECK(affine_step_simple(27, {3, 1}) == 82);
    CHECK(affine_step_simple(7, {5, 3}) == 38);
    CHECK(affine_step_simple(1, {1, 0}) == 1);
    CHECK_THROWS_AS(affine_step_simple(5, {10, 1}), std::domain_error);
    CHECK_THROWS_AS(affine_step_simple(5, {3, 12}), std::domain_error);
}

TEST_CASE("two-phase worked values") {
    CHECK(affine_step_two_phase(7, {5, 13}) == 48);
    CHECK(affine_step_two_phase(27, {3, 1}) == 82);
    CHECK(affine_step_two_phase(27, {3, 1}) == affine_step_simple(27, {3, 1}));
    CHECK(affine_step_two_phase(10, {12, 345}) == 465);
}

TEST_CASE("simple rule is exact on its full grid") {
    for (std::uint64_t a = 1; a <= 9; ++a) {
        for (std::uint64_t b = 0; b <= 9; ++b) {
            const AffineParams params{a, b};
            const Natural bound = carry_bound(params);
            for (std::uint64_t n = 1; n <= 10000; ++n) {
                const AffineStepInfo info = affine_step_simple_info(Natural(n), params);
                REQUIRE(info.value == a * n + b);
                REQUIRE(info.max_carry <= bound);
            }
        }
    }
}

TEST_CASE("two-phase is exact for multi-digit parameters") {
    const std::uint64_t as[] = {1, 2, 3, 7, 10, 12, 15, 19, 20};
    const std::uint64_t bs[] = {0, 1, 9, 10, 13, 99, 345, 400};
    for (std::uint64_t a : as) {
        for (std::uint64_t b : bs) {
            for (std::uint64_t n = 1; n <= 10000; n = n * 3 + 1) {
                CHECK(affine_step_two_phase(Natural(n), {a, b}) == a * n + b);
            }
        }
    }
}

TEST_CASE("carry bound formula") {
    CHECK(carry_bound({3, 1}) == 2);
    CHECK(carry_bound({1, 0}) == 0);
    CHECK(carry_bound({7, 9}) == 7);
}

TEST_CASE("observed carries respect the bound where b >= a - 10") {
    // Phase-1 carries are capped by a-1, so the floor((9a+b)/10) bound is
    // sound exactly when b >= a - 10; sample that region.
    const std::uint64_t as[] = {2, 5, 9, 10, 11, 14, 20};
    for (std::uint64_t a : as) {
        const std::uint64_t b_lo = (a > 10) ? a - 10 : 0;
        for (std::uint64_t b : {b_lo, b_lo + 7, b_lo + 123}) {
            const AffineParams params{a, b};
            const Natural bound = carry_bound(params);
            for (std::uint64_t n : {1ULL, 9ULL, 99ULL, 999ULL, 987654321ULL}) {
                const AffineStepInfo info = affine_step_two_phase_info(Natural(n), params);
                REQUIRE(info.value == a * n + b);
                CHECK(info.max_carry <= bound);
            }
        }
    }
}

TEST_CASE("carry bound counterexample outside that region is pinned") {
    // a=11, b=0 on n=99: phase-1 carries reach 10, one above floor(9a/10).
    const AffineStepInfo info = affine_step_two_phase_info(99, {11, 0});
    CHECK(info.value == 1089);
    CHECK(info.max_carry == 10);
    CHECK(carry_bound({11, 0}) == 9);
}

TEST_CASE("drift_general worked values") {
    CHECK(drift_general(1, 5) == doctest::Approx(std::log2(2.5)).epsilon(1e-9));
    CHECK(drift_general(3, 3) == doctest::Approx(-1.830075).epsilon(1e-6));
    CHECK_THROWS_AS(drift_general(4, 3), std::domain_error);
    CHECK_THROWS_AS(drift_general(3, 4), std::domain_error);
}

TEST_CASE("drift_general at a=3 coincides with the block drift") {
    for (std::uint64_t n = 1; n <= 10001; n += 2) {
        CHECK(drift_general(Natural(n), 3) == drift(Natural(n)).w);
    }
}

TEST_CASE("classical special case reproduces the digitwise step") {
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        const Natural v(n);
        const Natural next =
            is_odd(v) ? affine_step_simple(v, {3, 1}) : Natural(v >> 1);
        CHECK(next == symbolic_step(v));
    }
}

TEST_CASE("drift scan emits empirical and theoretical columns") {
    const auto rows = drift_scan({3, 5}, 20001, 2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].a == 3);
    CHECK(rows[0].sample_count == 10000);
    CHECK(rows[0].empirical_mean < 0.0);
    CHECK(rows[0].theoretical_mean == doctest::Approx(-0.830075).epsilon(1e-6));
    CHECK(rows[1].theoretical_mean == doctest::Approx(2.0 * std::log2(2.5) - 2.0).epsilon(1e-9));
    CHECK(rows[1].empirical_mean > 0.0);
    CHECK_THROWS_AS(drift_scan({4}, 100, 1), std::domain_error);
    CHECK_THROWS_AS(drift_scan({3}, 2, 1), std::domain_error);
}
