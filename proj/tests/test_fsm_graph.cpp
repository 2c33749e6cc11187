#include "collatz/fsm_graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "doctest.h"

using namespace collatz;

namespace {

const std::filesystem::path kReference =
    std::filesystem::path(COLLATZ_DATA_DIR) / "fsm_transitions_reference.txt";

bool contains(const std::vector<DigitState>& v, const DigitState& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

// Cycle equality up to rotation.
bool same_cycle(const std::vector<DigitState>& a, const std::vector<DigitState>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t shift = 0; shift < a.size(); ++shift) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[(i + shift) % a.size()] != b[i]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool has_cycle(const std::vector<std::vector<DigitState>>& cycles,
               const std::vector<DigitState>& wanted) {
    return std::any_of(cycles.begin(), cycles.end(),
                       [&](const auto& c) { return same_cycle(c, wanted); });
}

}  // namespace

TEST_CASE("state enumeration is lexicographic and complete") {
    const auto states = enumerate_states();
    REQUIRE(states.size() == 60);
    CHECK(states.front() == DigitState{0, 0, 0});
    CHECK(states.back() == DigitState{9, 1, 2});
    CHECK(std::count(states.begin(), states.end(), DigitState{9, 1, 2}) == 1);
    CHECK(std::is_sorted(states.begin(), states.end()));
    const std::set<DigitState> uniq(states.begin(), states.end());
    CHECK(uniq.size() == 60);
}

TEST_CASE("div targets") {
    CHECK(div_targets({1, 1, 0}) ==
          std::vector<DigitState>{{5, 0, 0}, {5, 1, 0}});
    CHECK(div_targets({2, 0, 1}).empty());
    CHECK(div_targets({0, 0, 0}) ==
          std::vector<DigitState>{{0, 0, 0}, {0, 1, 0}});
    CHECK(div_targets({9, 1, 2}).empty());
    CHECK(div_targets({2, 0, 2}).empty());
}

TEST_CASE("mul targets") {
    CHECK(mul_targets({6, 0, 0}) ==
          std::vector<DigitState>{{0, 0, 0}, {8, 1, 0}, {9, 1, 0}});
    CHECK(mul_targets({0, 0, 2}) == std::vector<DigitState>{{2, 0, 0}});
    CHECK(mul_targets({3, 0, 0}) ==
          std::vector<DigitState>{{0, 1, 0}, {1, 1, 0}, {9, 0, 0}});
}

TEST_CASE("built table matches the named rows") {
    const TransitionTable t = build_table();
    CHECK(t.rows.size() == 60);

    const auto& r912 = t.row({9, 1, 2});
    CHECK(r912.div.empty());
    CHECK(r912.mul == std::vector<DigitState>{{9, 1, 0}});

    const auto& r410 = t.row({4, 1, 0});
    CHECK(r410.div == std::vector<DigitState>{{7, 0, 0}, {7, 1, 0}});
    CHECK(r410.mul == std::vector<DigitState>{{2, 0, 0}, {3, 0, 0}, {4, 0, 0}});
}

TEST_CASE("table structural invariants") {
    const TransitionTable t = build_table();
    for (const auto& row : t.rows) {
        CHECK((row.div.size() == 0 || row.div.size() == 2));
        if (row.state.c == 0) {
            CHECK(row.mul.size() == 3);
        } else {
            CHECK(row.mul.size() == 1);
        }
        for (const auto& tgt : row.div) CHECK(tgt.c == 0);
        for (const auto& tgt : row.mul) CHECK(tgt.c == 0);
    }
}

TEST_CASE("generated table is exact against the shipped reference") {
    const VerifyReport report = verify_table(build_table(), kReference);
    CHECK(report.exact());
}

TEST_CASE("verify_table pinpoints a tampered row") {
    std::ifstream in(kReference);
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::string original = "4,1,0; 7,0,0; 7,1,0; 2,0,0; 3,0,0; 4,0,0";
    const std::string tampered = "4,1,0; 7,0,0; 7,1,0; 2,0,0; 3,0,0; 5,0,0";
    const auto pos = content.find(original);
    REQUIRE(pos != std::string::npos);
    content.replace(pos, original.size(), tampered);

    const auto tmp = std::filesystem::temp_directory_path() / "fsm_reference_tampered.txt";
    {
        std::ofstream out(tmp);
        out << content;
    }
    const VerifyReport report = verify_table(build_table(), tmp);
    REQUIRE(report.mismatches.size() == 1);
    CHECK(report.mismatches[0].state == DigitState{4, 1, 0});
    std::filesystem::remove(tmp);
}

TEST_CASE("verify_table rejects empty and ill-formed files") {
    const auto tmp = std::filesystem::temp_directory_path() / "fsm_reference_empty.txt";
    {
        std::ofstream out(tmp);
    }
    CHECK_THROWS_AS(verify_table(build_table(), tmp), std::runtime_error);
    {
        std::ofstream out(tmp);
        out << "0,0,0; 0,0,0\n";
    }
    CHECK_THROWS_AS(verify_table(build_table(), tmp), std::runtime_error);
    std::filesystem::remove(tmp);
    CHECK_THROWS_AS(verify_table(build_table(), tmp), std::runtime_error);
}

TEST_CASE("ranking is a breadth-first distance to the terminal cycle") {
    const TransitionTable t = build_table();
    const RankAssignment rank = ranking(t);

    CHECK(rank({4, 0, 0}) == 0);
    CHECK(rank({1, 0, 0}) == 0);
    CHECK(rank({2, 0, 0}) == 0);
    CHECK(rank({8, 0, 0}) == 1);
    CHECK(rank({0, 0, 0}) == 1);
    CHECK(rank({9, 1, 2}) == 3);

    int zero_rank = 0;
    for (const auto& s : enumerate_states()) {
        CHECK(rank(s) != RankAssignment::kUnreachable);  // every state reaches the cycle
        if (rank(s) == 0) ++zero_rank;
    }
    CHECK(zero_rank == 3);
}

TEST_CASE("descent structure: some successor is one rank closer, none skips") {
    const TransitionTable t = build_table();
    const RankAssignment rank = ranking(t);
    for (const auto& row : t.rows) {
        const int r = rank(row.state);
        if (r == 0) continue;
        std::vector<DigitState> succ = row.div;
        succ.insert(succ.end(), row.mul.begin(), row.mul.end());
        if (succ.empty()) continue;
        int best = 1000;
        for (const auto& s : succ) best = std::min(best, rank(s));
        CHECK(best == r - 1);
    }
}

TEST_CASE("rank-increasing edges exist and are counted, not asserted away") {
    const TransitionTable t = build_table();
    const EdgeMonotonicity stat = edge_monotonicity(t, ranking(t));
    CHECK(stat.total_edges == 150);
    CHECK(stat.increasing_edges == 31);
}

TEST_CASE("cycle enumeration finds the known loops") {
    const TransitionTable t = build_table();
    const auto cycles = find_cycles(t, 8);

    CHECK(has_cycle(cycles, {{1, 0, 0}, {4, 0, 0}, {2, 0, 0}}));
    CHECK(has_cycle(cycles, {{6, 0, 0}, {3, 0, 0}, {0, 1, 0}, {5, 1, 0}}));
    CHECK(has_cycle(cycles, {{8, 1, 0}, {9, 1, 0}}));
    CHECK(has_cycle(cycles, {{4, 1, 0}, {7, 0, 0}, {2, 0, 0}, {1, 1, 0}}));
    CHECK(has_cycle(cycles, {{0, 0, 0}}));

    for (const auto& c : cycles) CHECK(c.size() <= 8);
    CHECK(cycles.size() == 9528);

    const auto short_cycles = find_cycles(t, 2);
    for (const auto& c : short_cycles) CHECK(c.size() <= 2);
    CHECK(short_cycles.size() == 13);  // 4 self-loops + 9 two-cycles
}

TEST_CASE("active subgraph collapses to the 20 carry-free states") {
    const auto active = active_subgraph(10000);
    CHECK(active.size() == 20);
    for (const auto& s : active) CHECK(s.c == 0);

    const auto small = active_subgraph(2);
    CHECK(small.size() <= active.size());
    for (const auto& s : small) {
        CHECK(std::find(active.begin(), active.end(), s) != active.end());
    }
}
