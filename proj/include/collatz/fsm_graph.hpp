#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "collatz/symbolic.hpp"

namespace collatz {

inline constexpr int kStateCount = 60;

// Dense index over the lexicographic (r, p, c) enumeration.
inline int state_index(const DigitState& s) { return s.r * 6 + s.p * 3 + s.c; }
DigitState state_from_index(int idx);

// All 60 states in (r, p, c) lexicographic order.
std::vector<DigitState> enumerate_states();

// Division successors: defined iff c = 0, or c = 1 with r odd (the borrow
// matches the digit's own parity). Output digit floor((r-c)/2) + 5p; the
// successor's next-digit parity is unknown at graph level, hence two targets.
std::vector<DigitState> div_targets(const DigitState& s);

// Multiplication successors: one target per admissible incoming carry
// (all of {0,1,2} when c = 0, exactly {c} otherwise). v = 3r + c_in gives
// digit v mod 10, out-carry floor(v/10), parity (p + out-carry) mod 2.
std::vector<DigitState> mul_targets(const DigitState& s);

struct TransitionRow {
    DigitState state;
    std::vector<DigitState> div;  // 0 or 2 entries, sorted
    std::vector<DigitState> mul;  // 1 or 3 entries, sorted
};

struct TransitionTable {
    std::array<TransitionRow, kStateCount> rows;

    const TransitionRow& row(const DigitState& s) const { return rows[state_index(s)]; }
};

TransitionTable build_table();

struct TableMismatch {
    DigitState state;
    std::string expected;  // reference row, normalized
    std::string actual;    // generated row, normalized
};

struct VerifyReport {
    std::vector<TableMismatch> mismatches;
    bool exact() const { return mismatches.empty(); }
};

// Compares a generated table against the reference file (rows
// "state; div1; div2; mul1; mul2; mul3", "-" placeholders, '#' comments).
// Throws std::runtime_error on unreadable or ill-formed files.
VerifyReport verify_table(const TransitionTable& generated, const std::filesystem::path& reference);

inline constexpr std::array<DigitState, 3> kTerminalCycle{
    DigitState{1, 0, 0}, DigitState{4, 0, 0}, DigitState{2, 0, 0}};

struct RankAssignment {
    static constexpr int kUnreachable = -1;
    std::array<int, kStateCount> rho{};

    int operator()(const DigitState& s) const { return rho[state_index(s)]; }
};

// Shortest directed distance to the terminal cycle over div and mul edges
// combined (reverse breadth-first search).
RankAssignment ranking(const TransitionTable& t);

// Edges along which rho increases; reported, never asserted (nondeterministic
// branches may move away from the cycle).
struct EdgeMonotonicity {
    std::uint64_t total_edges = 0;
    std::uint64_t increasing_edges = 0;
};

EdgeMonotonicity edge_monotonicity(const TransitionTable& t, const RankAssignment& rank);

// All elementary directed cycles of length <= max_len over the union graph.
std::vector<std::vector<DigitState>> find_cycles(const TransitionTable& t, int max_len = 8);

// States occupied after the first transition of each orbit with start <= n_limit.
std::vector<DigitState> active_subgraph(std::uint64_t n_limit, std::uint64_t budget = 100000);

}  // namespace collatz
