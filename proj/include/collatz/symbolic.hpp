#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "collatz/natural.hpp"

namespace collatz {

// Thrown when a digit update is requested outside its domain (the "-" cells
// of the transition table).
struct UndefinedTransition : std::domain_error {
    using std::domain_error::domain_error;
};

// One digit cell: digit value r in [0,9], parity p of the next-higher digit
// in {0,1}, local carry/borrow c in {0,1,2}.
struct DigitState {
    std::uint8_t r = 0;
    std::uint8_t p = 0;
    std::uint8_t c = 0;

    friend bool operator==(const DigitState&, const DigitState&) = default;
    friend auto operator<=>(const DigitState&, const DigitState&) = default;

    bool valid() const { return r <= 9 && p <= 1 && c <= 2; }
    std::string str() const;
};

// Which update rule the stored carries belong to.
enum class OpContext : std::uint8_t { Odd, Even };

// Little-endian digit-state sequence for one integer. encode() produces the
// canonical form: no leading zero, p chained to the next digit (0 at the top),
// c_0 = 0 and higher carries precomputed for the rule selected by parity.
struct SymbolicNumber {
    std::vector<DigitState> states;
    OpContext op_context = OpContext::Odd;

    std::size_t size() const { return states.size(); }
    const DigitState& operator[](std::size_t i) const { return states[i]; }
    auto begin() const { return states.begin(); }
    auto end() const { return states.end(); }
};

SymbolicNumber encode(const Natural& n);  // throws std::domain_error for n = 0
Natural decode(const SymbolicNumber& s);  // throws std::invalid_argument

// Full canonical-invariant check (digit ranges, parity chain, leading zero,
// c_0 = 0, carry values matching op_context). decode() only requires the
// value-determining subset; this is the strict test used by property suites.
bool is_canonical(const SymbolicNumber& s);

// Even rule, closed form: floor((r - c)/2) + 5p.
// Domain: (r - c) >= 0 and even; otherwise UndefinedTransition.
int delta_even(int r, int p, int c);

// Even rule, table form indexed by (r - c) mod 10; agrees with delta_even
// wherever both are defined.
int lookup_even(int r, int p, int c);

struct OddUpdate {
    int digit;
    int carry;
};

// Odd rule at position i: digit (3r + c + [i=0]) mod 10, carry floor(.../10).
OddUpdate delta_odd(std::size_t i, int r, int c);

// One application of the map computed digitwise.
Natural symbolic_step(const Natural& n);

// Per-digit transition record of one step (the worked-example row layout).
struct StepDigitRow {
    std::size_t index;
    int r, p, c;
    int r_out;
    int p_out;                      // r_out mod 2
    std::optional<int> carry_out;   // odd rule only; even rule has no rightward carry
};

struct StepTrace {
    Natural input;
    Natural result;
    OpContext rule;
    std::vector<StepDigitRow> rows;
    int max_carry = 0;              // largest carry produced during the step
    bool digit_count_grew = false;
    int new_top_digit = 0;          // meaningful when digit_count_grew
};

StepTrace symbolic_step_trace(const Natural& n);

struct StepOutcome {
    Natural next;
    int max_carry = 0;
    bool digit_count_grew = false;
    int new_top_digit = 0;
};

// symbolic_step plus the carry/growth facts the bulk scans assert on.
StepOutcome symbolic_step_outcome(const Natural& n);

namespace detail {

struct DigitStepInfo {
    int max_carry = 0;
    bool grew = false;
    int new_top_digit = 0;
};

// One step applied in place to little-endian digits (no leading zeros).
// Internal kernel shared by the value-level API and the range scans.
DigitStepInfo step_digits(std::vector<std::uint8_t>& digits);

}  // namespace detail

struct TrajectoryRow {
    Natural value;
    SymbolicNumber states;
};

struct Trajectory {
    std::vector<TrajectoryRow> rows;
    bool truncated = false;
};

// Iterates symbolic_step until 1 or max_steps. Row 0 carries encode(n) with
// its precomputed carries; later rows carry the observed post-transition
// states, which always have c = 0 (transition targets reset the carry).
Trajectory symbolic_trajectory(const Natural& n, std::uint64_t max_steps);

}  // namespace collatz
