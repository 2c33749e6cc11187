#include "collatz/fsm_graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace collatz {

DigitState state_from_index(int idx) {
    return DigitState{static_cast<std::uint8_t>(idx / 6), static_cast<std::uint8_t>((idx / 3) % 2),
                      static_cast<std::uint8_t>(idx % 3)};
}

std::vector<DigitState> enumerate_states() {
    std::vector<DigitState> all;
    all.reserve(kStateCount);
    for (int idx = 0; idx < kStateCount; ++idx) all.push_back(state_from_index(idx));
    return all;
}

std::vector<DigitState> div_targets(const DigitState& s) {
    // Defined iff the carry is zero or matches an odd digit's own parity;
    // carry 2 never occurs in a division context.
    const bool defined = (s.c == 0) || (s.c == 1 && (s.r & 1));
    if (!defined) return {};
    const auto out = static_cast<std::uint8_t>((s.r - s.c) / 2 + 5 * s.p);
    return {DigitState{out, 0, 0}, DigitState{out, 1, 0}};
}

std::vector<DigitState> mul_targets(const DigitState& s) {
    std::vector<DigitState> targets;
    const int lo = (s.c == 0) ? 0 : s.c;
    const int hi = (s.c == 0) ? 2 : s.c;
    for (int c_in = lo; c_in <= hi; ++c_in) {
        const int v = 3 * s.r + c_in;
        targets.push_back(DigitState{static_cast<std::uint8_t>(v % 10),
                                     static_cast<std::uint8_t>((s.p + v / 10) % 2), 0});
    }
    std::sort(targets.begin(), targets.end());
    return targets;
}

TransitionTable build_table() {
    TransitionTable t;
    for (int idx = 0; idx < kStateCount; ++idx) {
        const DigitState s = state_from_index(idx);
        t.rows[idx] = TransitionRow{s, div_targets(s), mul_targets(s)};
    }
    return t;
}

namespace {

std::string row_repr(const std::vector<DigitState>& div, const std::vector<DigitState>& mul) {
    std::string out = "div{";
    for (const auto& d : div) out += d.str();
    out += "} mul{";
    for (const auto& m : mul) out += m.str();
    out += "}";
    return out;
}

DigitState parse_state_token(const std::string& token, int line_no) {
    int vals[3];
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        std::size_t next = token.find(',', pos);
        const std::string part =
            token.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
            vals[k] = std::stoi(part);
        } catch (const std::exception&) {
            throw std::runtime_error("reference table line " + std::to_string(line_no) +
                                     ": bad state token '" + token + "'");
        }
        if (k < 2) {
            if (next == std::string::npos) {
                throw std::runtime_error("reference table line " + std::to_string(line_no) +
                                         ": bad state token '" + token + "'");
            }
            pos = next + 1;
        }
    }
    DigitState s{static_cast<std::uint8_t>(vals[0]), static_cast<std::uint8_t>(vals[1]),
                 static_cast<std::uint8_t>(vals[2])};
    if (!s.valid()) {
        throw std::runtime_error("reference table line " + std::to_string(line_no) +
                                 ": state out of range '" + token + "'");
    }
    return s;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

VerifyReport verify_table(const TransitionTable& generated, const std::filesystem::path& reference) {
    std::ifstream in(reference);
    if (!in) throw std::runtime_error("cannot open reference table: " + reference.string());

    struct RefRow {
        std::vector<DigitState> div, mul;
    };
    std::array<std::optional<RefRow>, kStateCount> ref;
    int rows_seen = 0;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;

        std::vector<std::string> fields;
        std::stringstream ss(body);
        std::string field;
        while (std::getline(ss, field, ';')) fields.push_back(trim(field));
        if (fields.size() != 6) {
            throw std::runtime_error("reference table line " + std::to_string(line_no) +
                                     ": expected 6 fields, got " + std::to_string(fields.size()));
        }
        const DigitState s = parse_state_token(fields[0], line_no);
        RefRow row;
        for (int k = 1; k <= 2; ++k) {
            if (fields[k] != "-") row.div.push_back(parse_state_token(fields[k], line_no));
        }
        for (int k = 3; k <= 5; ++k) {
            if (fields[k] != "-") row.mul.push_back(parse_state_token(fields[k], line_no));
        }
        std::sort(row.div.begin(), row.div.end());
        std::sort(row.mul.begin(), row.mul.end());
        if (ref[state_index(s)]) {
            throw std::runtime_error("reference table line " + std::to_string(line_no) +
                                     ": duplicate state " + s.str());
        }
        ref[state_index(s)] = std::move(row);
        ++rows_seen;
    }
    if (rows_seen != kStateCount) {
        throw std::runtime_error("reference table has " + std::to_string(rows_seen) +
                                 " rows, expected 60");
    }

    VerifyReport report;
    for (int idx = 0; idx < kStateCount; ++idx) {
        const auto& gen = generated.rows[idx];
        auto gdiv = gen.div;
        auto gmul = gen.mul;
        std::sort(gdiv.begin(), gdiv.end());
        std::sort(gmul.begin(), gmul.end());
        const auto& r = *ref[idx];
        if (gdiv != r.div || gmul != r.mul) {
            report.mismatches.push_back(TableMismatch{state_from_index(idx),
                                                      row_repr(r.div, r.mul),
                                                      row_repr(gdiv, gmul)});
        }
    }
    return report;
}

RankAssignment ranking(const TransitionTable& t) {
    std::array<std::vector<int>, kStateCount> predecessors;
    for (int idx = 0; idx < kStateCount; ++idx) {
        for (const auto& tgt : t.rows[idx].div) predecessors[state_index(tgt)].push_back(idx);
        for (const auto& tgt : t.rows[idx].mul) predecessors[state_index(tgt)].push_back(idx);
    }

    RankAssignment rank;
    rank.rho.fill(RankAssignment::kUnreachable);
    std::deque<int> queue;
    for (const auto& s : kTerminalCycle) {
        rank.rho[state_index(s)] = 0;
        queue.push_back(state_index(s));
    }
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        for (int pred : predecessors[cur]) {
            if (rank.rho[pred] == RankAssignment::kUnreachable) {
                rank.rho[pred] = rank.rho[cur] + 1;
                queue.push_back(pred);
            }
        }
    }
    return rank;
}

EdgeMonotonicity edge_monotonicity(const TransitionTable& t, const RankAssignment& rank) {
    // Counted over the union graph, the same edge set the ranking runs on.
    EdgeMonotonicity stat;
    for (int idx = 0; idx < kStateCount; ++idx) {
        std::set<int> targets;
        for (const auto& tgt : t.rows[idx].div) targets.insert(state_index(tgt));
        for (const auto& tgt : t.rows[idx].mul) targets.insert(state_index(tgt));
        for (int tgt : targets) {
            ++stat.total_edges;
            if (rank.rho[tgt] > rank.rho[idx]) ++stat.increasing_edges;
        }
    }
    return stat;
}

std::vector<std::vector<DigitState>> find_cycles(const TransitionTable& t, int max_len) {
    std::array<std::vector<int>, kStateCount> succ;
    for (int idx = 0; idx < kStateCount; ++idx) {
        std::set<int> uniq;
        for (const auto& tgt : t.rows[idx].div) uniq.insert(state_index(tgt));
        for (const auto& tgt : t.rows[idx].mul) uniq.insert(state_index(tgt));
        succ[idx].assign(uniq.begin(), uniq.end());
    }

    // Elementary cycles, each reported once rooted at its smallest index:
    // depth-first search that never visits nodes below the root.
    std::vector<std::vector<DigitState>> cycles;
    std::vector<int> path;
    std::array<bool, kStateCount> on_path{};

    auto dfs = [&](auto&& self, int root, int node) -> void {
        path.push_back(node);
        on_path[node] = true;
        for (int next : succ[node]) {
            if (next == root) {
                std::vector<DigitState> cycle;
                cycle.reserve(path.size());
                for (int idx : path) cycle.push_back(state_from_index(idx));
                cycles.push_back(std::move(cycle));
            } else if (next > root && !on_path[next] &&
                       static_cast<int>(path.size()) < max_len) {
                self(self, root, next);
            }
        }
        on_path[node] = false;
        path.pop_back();
    };

    for (int root = 0; root < kStateCount; ++root) dfs(dfs, root, root);
    return cycles;
}

std::vector<DigitState> active_subgraph(std::uint64_t n_limit, std::uint64_t budget) {
    if (n_limit < 2) throw std::domain_error("active_subgraph requires n_limit >= 2");
    std::array<bool, kStateCount> seen{};
    for (std::uint64_t n = 1; n <= n_limit; ++n) {
        const Trajectory traj = symbolic_trajectory(Natural(n), budget);
        for (std::size_t row = 1; row < traj.rows.size(); ++row) {
            for (const auto& st : traj.rows[row].states) seen[state_index(st)] = true;
        }
    }
    std::vector<DigitState> out;
    for (int idx = 0; idx < kStateCount; ++idx) {
        if (seen[idx]) out.push_back(state_from_index(idx));
    }
    return out;
}

}  // namespace collatz
