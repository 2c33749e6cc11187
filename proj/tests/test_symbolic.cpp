#include "collatz/symbolic.hpp"

#include <random>

#include "doctest.h"

using namespace collatz;

namespace {

SymbolicNumber make(std::vector<DigitState> states, OpContext ctx) {
    return SymbolicNumber{std::move(states), ctx};
}

std::uint64_t oracle_t(std::uint64_t n) { return n % 2 == 0 ? n / 2 : 3 * n + 1; }

}  // namespace

TEST_CASE("encode produces the worked digit states") {
    const SymbolicNumber s13 = encode(13);
    REQUIRE(s13.states.size() == 2);
    CHECK(s13.op_context == OpContext::Odd);
    CHECK(s13.states[0] == DigitState{3, 1, 0});
    CHECK(s13.states[1] == DigitState{1, 0, 1});

    const SymbolicNumber s32 = encode(32);
    REQUIRE(s32.states.size() == 2);
    CHECK(s32.op_context == OpContext::Even);
    CHECK(s32.states[0] == DigitState{2, 1, 0});
    CHECK(s32.states[1] == DigitState{3, 0, 1});

    const SymbolicNumber s1 = encode(1);
    REQUIRE(s1.states.size() == 1);
    CHECK(s1.op_context == OpContext::Odd);
    CHECK(s1.states[0] == DigitState{1, 0, 0});

    CHECK(is_canonical(s13));
    CHECK(is_canonical(s32));
    CHECK(is_canonical(s1));
}

TEST_CASE("encode rejects zero") {
    CHECK_THROWS_AS(encode(0), std::domain_error);
}

TEST_CASE("decode inverts encode and accepts out-carry style states") {
    CHECK(decode(make({{3, 1, 0}, {1, 0, 1}}, OpContext::Odd)) == 13);
    CHECK(decode(make({{1, 0, 0}}, OpContext::Odd)) == 1);
    // States read off a transition's output columns: carries are out-carries.
    CHECK(decode(make({{2, 0, 2}, {8, 0, 0}}, OpContext::Even)) == 82);
}

TEST_CASE("decode rejects malformed sequences") {
    CHECK_THROWS_AS(decode(make({}, OpContext::Odd)), std::invalid_argument);
    CHECK_THROWS_AS(decode(make({{12, 0, 0}}, OpContext::Odd)), std::invalid_argument);
    // Parity flag inconsistent with the next digit.
    CHECK_THROWS_AS(decode(make({{3, 0, 0}, {1, 0, 1}}, OpContext::Odd)), std::invalid_argument);
    // Leading zero.
    CHECK_THROWS_AS(decode(make({{5, 0, 0}, {0, 0, 0}}, OpContext::Odd)), std::invalid_argument);
}

TEST_CASE("delta_even closed form") {
    CHECK(delta_even(2, 1, 0) == 6);
    CHECK(delta_even(3, 0, 1) == 1);
    CHECK(delta_even(0, 0, 0) == 0);
    CHECK(delta_even(0, 1, 0) == 5);
    CHECK_THROWS_AS(delta_even(0, 0, 1), UndefinedTransition);   // negative adjusted digit
    CHECK_THROWS_AS(delta_even(2, 0, 1), UndefinedTransition);   // odd adjusted digit
}

TEST_CASE("lookup_even matches the table") {
    CHECK(lookup_even(0, 1, 0) == 5);
    CHECK(lookup_even(8, 0, 0) == 4);
    CHECK(lookup_even(4, 1, 0) == 7);
    CHECK_THROWS_AS(lookup_even(3, 0, 0), UndefinedTransition);
}

TEST_CASE("lookup and closed form agree on the joint domain") {
    for (int r = 0; r <= 9; ++r) {
        for (int p = 0; p <= 1; ++p) {
            for (int c = 0; c <= 2; ++c) {
                if (r - c < 0 || (r - c) % 2 != 0) continue;
                CHECK(delta_even(r, p, c) == lookup_even(r, p, c));
            }
        }
    }
}

TEST_CASE("delta_odd digit and carry updates") {
    CHECK(delta_odd(0, 7, 0).digit == 2);
    CHECK(delta_odd(0, 7, 0).carry == 2);
    CHECK(delta_odd(1, 2, 2).digit == 8);
    CHECK(delta_odd(1, 2, 2).carry == 0);
    CHECK(delta_odd(0, 9, 0).digit == 8);
    CHECK(delta_odd(0, 9, 0).carry == 2);
    CHECK(delta_odd(1, 0, 0).digit == 0);
    CHECK(delta_odd(1, 0, 0).carry == 0);
}

TEST_CASE("symbolic_step worked values") {
    CHECK(symbolic_step(27) == 82);
    CHECK(symbolic_step(32) == 16);
    CHECK(symbolic_step(1) == 4);
    CHECK(symbolic_step(40) == 20);
    CHECK(symbolic_step(16) == 8);  // leading zero stripped
    CHECK_THROWS_AS(symbolic_step(0), std::domain_error);
}

TEST_CASE("symbolic_step equals the direct map on a dense range") {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        const StepOutcome out = symbolic_step_outcome(Natural(n));
        REQUIRE(out.next == oracle_t(n));
        REQUIRE(out.max_carry <= 2);
        if (out.digit_count_grew) {
            REQUIRE((out.new_top_digit == 1 || out.new_top_digit == 2));
        }
    }
}

TEST_CASE("symbolic_step handles big values") {
    const Natural big("123456789012345678901234567890123456789");
    CHECK(symbolic_step(big) == 3 * big + 1);
    CHECK(symbolic_step(big + 1) == (big + 1) / 2);
}

TEST_CASE("round trip over a range and random wide values") {
    for (std::uint64_t n = 1; n <= 20000; ++n) {
        CHECK(decode(encode(Natural(n))) == n);
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Natural v = 1;
        const int limbs = 1 + static_cast<int>(rng() % 5);
        for (int j = 0; j < limbs; ++j) v = v * (Natural(1) << 64) + rng();
        CHECK(decode(encode(v)) == v);
    }
}

TEST_CASE("step trace reproduces the odd worked example") {
    const StepTrace t = symbolic_step_trace(27);
    CHECK(t.result == 82);
    CHECK(t.rule == OpContext::Odd);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].r == 7);
    CHECK(t.rows[0].p == 0);
    CHECK(t.rows[0].c == 0);
    CHECK(t.rows[0].r_out == 2);
    CHECK(t.rows[0].p_out == 0);
    CHECK(t.rows[0].carry_out == 2);
    CHECK(t.rows[1].r == 2);
    CHECK(t.rows[1].c == 2);
    CHECK(t.rows[1].r_out == 8);
    CHECK(t.rows[1].carry_out == 0);
    CHECK(t.max_carry == 2);
}

TEST_CASE("step trace reproduces the even worked example") {
    const StepTrace t = symbolic_step_trace(32);
    CHECK(t.result == 16);
    CHECK(t.rule == OpContext::Even);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].r == 2);
    CHECK(t.rows[0].p == 1);
    CHECK(t.rows[0].c == 0);
    CHECK(t.rows[0].r_out == 6);
    CHECK(!t.rows[0].carry_out.has_value());
    CHECK(t.rows[1].r == 3);
    CHECK(t.rows[1].p == 0);
    CHECK(t.rows[1].c == 1);
    CHECK(t.rows[1].r_out == 1);
}

TEST_CASE("trajectory of 13 matches the reference state table") {
    const Trajectory traj = symbolic_trajectory(13, 100);
    REQUIRE(!traj.truncated);
    REQUIRE(traj.rows.size() == 10);

    const std::uint64_t values[] = {13, 40, 20, 10, 5, 16, 8, 4, 2, 1};
    const DigitState s0[] = {{3, 1, 0}, {0, 0, 0}, {0, 0, 0}, {0, 1, 0}, {5, 0, 0},
                             {6, 1, 0}, {8, 0, 0}, {4, 0, 0}, {2, 0, 0}, {1, 0, 0}};
    const DigitState s1[] = {{1, 0, 1}, {4, 0, 0}, {2, 0, 0}, {1, 0, 0}, {0, 0, 0},
                             {1, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(traj.rows[i].value == values[i]);
        CHECK(traj.rows[i].states[0] == s0[i]);
        const DigitState high =
            traj.rows[i].states.size() > 1 ? traj.rows[i].states[1] : DigitState{0, 0, 0};
        CHECK(high == s1[i]);
    }
}

TEST_CASE("trajectory terminates immediately at 1 and flags truncation") {
    const Trajectory t1 = symbolic_trajectory(1, 3);
    CHECK(t1.rows.size() == 1);
    CHECK(t1.rows[0].value == 1);
    CHECK(!t1.truncated);

    const Trajectory t27 = symbolic_trajectory(27, 5);
    CHECK(t27.truncated);
    CHECK(t27.rows.size() == 6);

    CHECK_THROWS_AS(symbolic_trajectory(5, 0), std::domain_error);
}

TEST_CASE("trajectory of 27 reaches 1 in 111 steps") {
    const Trajectory t = symbolic_trajectory(27, 200);
    REQUIRE(!t.truncated);
    CHECK(t.rows.size() == 112);
    CHECK(t.rows.back().value == 1);
}
