// Command-line front end: worked-example printers plus the range scans and
// CSV/JSON emitters. Exit codes: 0 success, 1 verification failure, 2 usage.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "collatz/affine.hpp"
#include "collatz/bitfsm.hpp"
#include "collatz/blocks.hpp"
#include "collatz/checks.hpp"
#include "collatz/fsm_graph.hpp"
#include "collatz/parallel.hpp"
#include "collatz/stats.hpp"
#include "collatz/symbolic.hpp"

using json = nlohmann::ordered_json;
using namespace collatz;

namespace {

#ifndef COLLATZ_DEFAULT_REFERENCE
#define COLLATZ_DEFAULT_REFERENCE "data/fsm_transitions_reference.txt"
#endif

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

Natural parse_natural(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw std::domain_error("expected a non-negative integer, got '" + text + "'");
    }
    return Natural(text);
}

// Data goes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string ctx_name(OpContext ctx) { return ctx == OpContext::Odd ? "odd" : "even"; }

int cmd_step(const std::string& n_text, const std::string& format) {
    const Natural n = parse_natural(n_text);
    const StepTrace t = symbolic_step_trace(n);
    if (format == "json") {
        json out;
        out["n"] = t.input.str();
        out["rule"] = ctx_name(t.rule);
        out["rows"] = json::array();
        for (const auto& row : t.rows) {
            json r;
            r["i"] = row.index;
            r["r"] = row.r;
            r["p"] = row.p;
            r["c"] = row.c;
            r["r_out"] = row.r_out;
            r["p_out"] = row.p_out;
            if (row.carry_out) r["carry_out"] = *row.carry_out;
            out["rows"].push_back(r);
        }
        if (t.digit_count_grew) out["new_top_digit"] = t.new_top_digit;
        out["result"] = t.result.str();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "n = " << t.input << " (" << ctx_name(t.rule) << " rule)\n";
    std::cout << "  i   r   p   c   r'  p'  c+1\n";
    for (const auto& row : t.rows) {
        std::printf("  %-3zu %-3d %-3d %-3d %-3d %-3d %s\n", row.index, row.r, row.p, row.c,
                    row.r_out, row.p_out,
                    row.carry_out ? std::to_string(*row.carry_out).c_str() : "-");
    }
    if (t.digit_count_grew) {
        std::cout << "  new top digit: " << t.new_top_digit << "\n";
    }
    std::cout << "T(" << t.input << ") = " << t.result << "\n";
    return 0;
}

int cmd_trajectory(const std::string& n_text, std::uint64_t budget, const std::string& format) {
    const Natural n = parse_natural(n_text);
    const Trajectory traj = symbolic_trajectory(n, budget);

    std::size_t width = 0;
    for (const auto& row : traj.rows) width = std::max(width, row.states.size());

    if (format == "json") {
        json out;
        out["n"] = n.str();
        out["truncated"] = traj.truncated;
        out["rows"] = json::array();
        for (std::size_t t = 0; t < traj.rows.size(); ++t) {
            json r;
            r["step"] = t;
            r["value"] = traj.rows[t].value.str();
            json states = json::array();
            for (const auto& s : traj.rows[t].states) states.push_back({s.r, s.p, s.c});
            r["states"] = states;
            out["rows"].push_back(r);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "step  value";
    for (std::size_t i = width; i-- > 0;) std::cout << "  s" << i << "     ";
    std::cout << "\n";
    for (std::size_t t = 0; t < traj.rows.size(); ++t) {
        const auto& row = traj.rows[t];
        std::printf("%-5zu %-6s", t, row.value.str().c_str());
        for (std::size_t i = width; i-- > 0;) {
            const DigitState s = i < row.states.size() ? row.states[i] : DigitState{0, 0, 0};
            std::printf("  %s", s.str().c_str());
        }
        std::printf("\n");
    }
    if (traj.truncated) std::cout << "truncated after " << budget << " steps\n";
    return 0;
}

json state_json(const DigitState& s) { return json::array({s.r, s.p, s.c}); }

int cmd_fsm(const std::string& reference, const std::string& out_path, int cycle_limit,
            std::uint64_t active_limit) {
    const TransitionTable table = build_table();
    const VerifyReport report = verify_table(table, reference);
    const RankAssignment rank = ranking(table);
    const EdgeMonotonicity mono = edge_monotonicity(table, rank);
    const auto cycles = find_cycles(table, cycle_limit);
    const auto active = active_subgraph(active_limit);

    json out;
    out["states"] = kStateCount;
    out["reference"] = reference;
    out["mismatches"] = json::array();
    for (const auto& m : report.mismatches) {
        out["mismatches"].push_back(
            {{"state", m.state.str()}, {"expected", m.expected}, {"actual", m.actual}});
    }
    json rho = json::object();
    for (const auto& s : enumerate_states()) rho[s.str()] = rank(s);
    out["rho"] = rho;
    out["edge_monotonicity"] = {{"total_edges", mono.total_edges},
                                {"increasing_edges", mono.increasing_edges}};
    out["cycle_length_limit"] = cycle_limit;
    out["cycle_count"] = cycles.size();
    json cy = json::array();
    for (const auto& c : cycles) {
        json one = json::array();
        for (const auto& s : c) one.push_back(state_json(s));
        cy.push_back(one);
    }
    out["cycles"] = cy;
    out["active_limit"] = active_limit;
    out["active_states"] = json::array();
    for (const auto& s : active) out["active_states"].push_back(state_json(s));

    Sink sink(out_path);
    sink.stream() << out.dump(2) << "\n";
    if (!report.exact()) {
        std::cerr << report.mismatches.size() << " table mismatches\n";
        return 1;
    }
    return 0;
}

int cmd_drift(std::uint64_t limit, const std::string& out_dir, double bin_width,
              std::uint64_t qq_k, unsigned threads, const std::string& format) {
    if (limit < 3) throw std::domain_error("drift scan needs --limit >= 3 (no odd n >= 3 below)");

    // Fill by index so any thread count produces identical output.
    const std::uint64_t count = (limit - 3) / 2 + 1;
    std::vector<double> samples(count);
    {
        const unsigned workers = resolve_threads(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (std::uint64_t i = t; i < count; i += workers) {
                    samples[i] = drift(Natural(3 + 2 * i)).w;
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    MomentAccumulator acc;
    for (double w : samples) acc.push(w);
    const MomentSummary s = finalize(acc);
    const auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string{}; };

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        const std::filesystem::path dir(out_dir);
        {
            std::ofstream f(dir / "drift.csv");
            f << "n,w\n";
            std::uint64_t n = 3;
            for (double w : samples) {
                f << n << "," << num(w) << "\n";
                n += 2;
            }
        }
        {
            std::ofstream f(dir / "summary.csv");
            f << "# moments: population\n";
            f << "count,mean,sd,skewness,excess_kurtosis\n";
            f << s.count << "," << opt(s.mean) << "," << opt(s.sd) << "," << opt(s.skewness)
              << "," << opt(s.excess_kurtosis) << "\n";
        }
        {
            std::ofstream f(dir / "hist.csv");
            f << "bin_low,count\n";
            for (const auto& b : histogram(samples, bin_width, 0.0)) {
                f << num(b.bin_low) << "," << b.count << "\n";
            }
        }
        if (s.sd && *s.sd > 0.0) {
            std::ofstream f(dir / "qq.csv");
            f << "theoretical_q,empirical_q\n";
            for (const auto& [tq, eq] : qq_points(samples, *s.mean, *s.sd, qq_k)) {
                f << num(tq) << "," << num(eq) << "\n";
            }
        }
        std::cerr << "wrote drift.csv, summary.csv, hist.csv, qq.csv to " << out_dir << "\n";
    }

    if (format == "json") {
        json out;
        out["count"] = s.count;
        out["mean"] = s.mean ? json(*s.mean) : json(nullptr);
        out["sd"] = s.sd ? json(*s.sd) : json(nullptr);
        out["skewness"] = s.skewness ? json(*s.skewness) : json(nullptr);
        out["excess_kurtosis"] = s.excess_kurtosis ? json(*s.excess_kurtosis) : json(nullptr);
        out["moments"] = "population";
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "count,mean,sd,skewness,excess_kurtosis\n";
        std::cout << s.count << "," << opt(s.mean) << "," << opt(s.sd) << ","
                  << opt(s.skewness) << "," << opt(s.excess_kurtosis) << "\n";
    }
    return 0;
}

int cmd_blocks(const std::string& n_text, std::uint64_t budget, const std::string& format) {
    const Natural n = parse_natural(n_text);
    const BlockTrace trace = block_decompose(n, budget);
    if (format == "json") {
        json out;
        out["n"] = n.str();
        out["blocks"] = json::array();
        for (const auto& b : trace.blocks) {
            out["blocks"].push_back({{"to", b.to_count},
                                     {"tz", b.tz_count},
                                     {"n_start", b.n_start.str()},
                                     {"n_prime", b.n_prime.str()}});
        }
        out["classical_steps"] = trace.classical_steps;
        out["truncated"] = trace.truncated;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "n = " << n << "\n";
    for (std::size_t i = 0; i < trace.blocks.size(); ++i) {
        const auto& b = trace.blocks[i];
        std::cout << "block " << i + 1 << ": mul phase " << b.to_count << " (start " << b.n_start
                  << ", reaches " << b.n_prime << "), div phase " << b.tz_count << "\n";
    }
    std::cout << "blocks:";
    for (const auto& b : trace.blocks) std::cout << " (" << b.to_count << "," << b.tz_count << ")";
    std::cout << "\nclassical steps: " << trace.classical_steps << "\n";
    if (trace.truncated) std::cout << "truncated at budget " << budget << "\n";
    return 0;
}

int cmd_energy(std::uint64_t limit, const std::string& out_path, const std::string& format) {
    const EnergyReport report = energy_descent_scan(limit);
    Sink sink(out_path);
    if (format == "json") {
        json out;
        out["range_max"] = limit;
        out["samples"] = report.samples.size();
        out["violations"] = report.violation_count;
        json v = json::array();
        for (const auto& s : report.samples) {
            if (s.delta_f >= 0) v.push_back({{"n", s.n}, {"delta_f", s.delta_f}});
        }
        out["violating"] = v;
        sink.stream() << out.dump(2) << "\n";
    } else {
        sink.stream() << "n,delta_f\n";
        for (const auto& s : report.samples) {
            sink.stream() << s.n << "," << num(s.delta_f) << "\n";
        }
        std::cerr << "violations (delta_f >= 0): " << report.violation_count << "\n";
    }
    return 0;
}

int cmd_metrics(std::uint64_t limit, std::uint64_t budget, const std::string& out_path) {
    Sink sink(out_path);
    sink.stream() << "n,t_end,l_peak,t_peak,t_eff,constraint_holds\n";
    std::uint64_t violations = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        const OrbitMetrics m = orbit_metrics(Natural(n), budget);
        if (m.truncated) {
            sink.stream() << n << ",truncated,,,,\n";
            continue;
        }
        if (!m.constraint_holds) ++violations;
        sink.stream() << n << "," << m.t_end << "," << m.l_peak << "," << m.t_peak << ","
                      << (m.t_eff_defined ? num(m.t_eff) : "") << ","
                      << (m.constraint_holds ? 1 : 0) << "\n";
    }
    std::cerr << "peak-constraint violations: " << violations << " of " << limit << "\n";
    return 0;
}

int cmd_affine(std::uint64_t a_min, std::uint64_t a_max, std::uint64_t limit, unsigned threads,
               const std::string& out_path) {
    if (a_min % 2 == 0 || a_max % 2 == 0) {
        throw std::domain_error("--a-min/--a-max must be odd");
    }
    std::vector<std::uint64_t> a_values;
    for (std::uint64_t a = a_min; a <= a_max; a += 2) a_values.push_back(a);
    const auto rows = drift_scan(a_values, limit, threads);
    Sink sink(out_path);
    sink.stream() << "a,empirical_mean,theoretical_mean,sample_count\n";
    for (const auto& r : rows) {
        sink.stream() << r.a << "," << num(r.empirical_mean) << "," << num(r.theoretical_mean)
                      << "," << r.sample_count << "\n";
    }
    return 0;
}

int cmd_quotient(const std::string& n_text, const std::string& format) {
    const Natural n = parse_natural(n_text);
    const QuotientDecoding dec = quotient_decode(n);
    if (format == "json") {
        json out;
        out["n"] = n.str();
        json q = json::array(), b = json::array(), sym = json::array();
        for (const auto& v : dec.q_chain) q.push_back(v.str());
        for (const auto& v : dec.b_chain) b.push_back(v.str());
        for (const auto& s : dec.symbols) sym.push_back(to_string(s));
        out["q_chain"] = q;
        out["b_chain"] = b;
        out["symbols"] = sym;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "i     q_i       b_i       symbol\n";
    for (std::size_t i = 0; i < dec.b_chain.size(); ++i) {
        const std::string q = i < dec.q_chain.size() ? dec.q_chain[i].str() : "-";
        std::printf("%-5zu %-9s %-9s %s\n", i, q.c_str(), dec.b_chain[i].str().c_str(),
                    to_string(dec.symbols[i]));
    }
    std::cout << "symbolic sequence:";
    for (std::size_t i = 0; i < dec.symbols.size(); ++i) {
        if (dec.symbols[i] == QuotientSymbol::Induced) continue;
        std::cout << " " << to_string(dec.symbols[i]);
    }
    std::cout << "\n";
    return 0;
}

int cmd_bitfsm(const std::string& n_text, const std::string& format) {
    const Natural n = parse_natural(n_text);
    const BitFsmTrace t = bit_fsm_trace(n);
    if (format == "json") {
        json out;
        out["n"] = n.str();
        out["input_bits"] = t.input_bits;
        out["window_outputs"] = t.window_outputs;
        out["growth"] = t.growth == GrowthSymbol::PlusTwo ? "+2" : "+1";
        out["leading_bit_label"] = t.heuristic == GrowthSymbol::PlusTwo ? "+2" : "+1";
        out["label_agrees"] = t.heuristic_agrees;
        out["predicted_symbols"] = t.predicted_symbols;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "n = " << n << " = " << t.input_bits << "b\n";
    std::cout << "window outputs: " << t.window_outputs << "\n";
    std::cout << "growth: " << (t.growth == GrowthSymbol::PlusTwo ? "+2" : "+1")
              << " (leading-bit label " << (t.heuristic == GrowthSymbol::PlusTwo ? "+2" : "+1")
              << (t.heuristic_agrees ? ", agrees" : ", disagrees") << ")\n";
    std::cout << "symbols:";
    for (const auto& s : t.predicted_symbols) std::cout << " " << s;
    std::cout << "\n";
    return 0;
}

int cmd_bits(const std::string& n_text, std::uint64_t budget, const std::string& out_path) {
    const Natural n = parse_natural(n_text);
    const BitTable table = bit_table(n, budget);
    Sink sink(out_path);
    sink.stream() << "step,value,bits,bit_count,tz\n";
    for (const auto& row : table.rows) {
        sink.stream() << row.step << "," << row.value << "," << row.bits << "," << row.bit_count
                      << "," << row.tz << "\n";
    }
    if (table.truncated) std::cerr << "truncated at budget " << budget << "\n";
    return 0;
}

int cmd_length(std::uint64_t limit, std::uint64_t budget, const std::string& out_path) {
    Sink sink(out_path);
    sink.stream() << "n,l_sym,l_classical\n";
    for (std::uint64_t n = 1; n <= limit; n += 2) {
        const SymbolicLength len = symbolic_length(Natural(n), budget);
        if (len.truncated) {
            sink.stream() << n << ",truncated,\n";
        } else {
            sink.stream() << n << "," << len.l_sym << "," << len.l_classical << "\n";
        }
    }
    return 0;
}

int cmd_verify_all(std::uint64_t limit, const std::string& reference, unsigned threads) {
    CheckConfig cfg;
    cfg.oracle_limit = limit;
    cfg.terminal_limit = limit;
    cfg.drift_limit = limit;
    cfg.bit_growth_limit = limit;
    cfg.energy_limit = std::min<std::uint64_t>(limit, 10000);
    cfg.block_limit = limit;
    cfg.metrics_limit = std::min<std::uint64_t>(limit, 10000);
    cfg.affine_limit = limit;
    cfg.reference_table = reference;
    cfg.threads = threads;

    const auto results = run_verification(cfg);
    int failures = 0;
    for (const auto& r : results) {
        const char* tag = r.report_only ? "REPORT" : (r.pass ? "PASS" : "FAIL");
        if (!r.pass && !r.report_only) ++failures;
        std::printf("[%s] %s: %s\n", tag, r.name.c_str(), r.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Digitwise finite-state laboratory for the 3n+1 map"};
    app.require_subcommand(1);

    std::string n_text;
    std::string format = "text";
    std::string out_path;
    std::string reference = COLLATZ_DEFAULT_REFERENCE;
    std::uint64_t limit = 10000;
    std::uint64_t budget = 100000;
    unsigned threads = 0;
    double bin_width = 0.25;
    std::uint64_t qq_k = 99;
    int cycle_limit = 8;
    std::uint64_t a_min = 3, a_max = 49;

    auto* step = app.add_subcommand("step", "One digitwise step with its transition rows");
    step->add_option("n", n_text, "input value")->required();
    step->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* traj = app.add_subcommand("trajectory", "Iterate to 1, printing the state table");
    traj->add_option("n", n_text, "start value")->required();
    traj->add_option("--budget", budget, "step budget");
    traj->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* fsm = app.add_subcommand("fsm", "Build the 60-state graph, verify, rank, find cycles");
    fsm->add_option("--reference", reference, "reference table path");
    fsm->add_option("--out", out_path, "write the JSON report here");
    fsm->add_option("--cycle-limit", cycle_limit, "elementary cycle length bound");
    std::uint64_t active_limit = 10000;
    fsm->add_option("--active-limit", active_limit, "orbit range for the active-state scan");

    auto* drift_cmd = app.add_subcommand("drift", "Drift samples, moments, histogram, Q-Q data");
    drift_cmd->add_option("--limit", limit, "scan odd n in [3, limit]")->required();
    drift_cmd->add_option("--out", out_path, "directory for drift/summary/hist/qq CSV files");
    drift_cmd->add_option("--bin-width", bin_width);
    drift_cmd->add_option("--qq-points", qq_k);
    drift_cmd->add_option("--threads", threads);
    drift_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* blocks_cmd = app.add_subcommand("blocks", "Multiplicative/divisive block decomposition");
    blocks_cmd->add_option("n", n_text)->required();
    blocks_cmd->add_option("--budget", budget);
    blocks_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* energy_cmd = app.add_subcommand("energy", "Blockwise energy deltas and violations");
    energy_cmd->add_option("--limit", limit)->required();
    energy_cmd->add_option("--out", out_path);
    energy_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* metrics_cmd = app.add_subcommand("metrics", "Orbit peak metrics CSV");
    metrics_cmd->add_option("--limit", limit)->required();
    metrics_cmd->add_option("--budget", budget);
    metrics_cmd->add_option("--out", out_path);

    auto* affine_cmd = app.add_subcommand("affine", "Generalized drift scan over odd multipliers");
    affine_cmd->add_option("--a-min", a_min);
    affine_cmd->add_option("--a-max", a_max);
    affine_cmd->add_option("--limit", limit)->required();
    affine_cmd->add_option("--threads", threads);
    affine_cmd->add_option("--out", out_path);

    auto* quot = app.add_subcommand("quotient", "Halving-chain decoding table");
    quot->add_option("n", n_text)->required();
    quot->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* bitfsm_cmd = app.add_subcommand("bitfsm", "Bit-window trace and growth prediction");
    bitfsm_cmd->add_option("n", n_text)->required();
    bitfsm_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* bits_cmd = app.add_subcommand("bits", "Per-step binary table down to 1");
    bits_cmd->add_option("n", n_text)->required();
    bits_cmd->add_option("--budget", budget);
    bits_cmd->add_option("--out", out_path);

    auto* length_cmd = app.add_subcommand("length", "Symbolic vs classical step counts");
    length_cmd->add_option("--limit", limit)->required();
    length_cmd->add_option("--budget", budget);
    length_cmd->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify-all", "Run every invariant suite");
    verify->add_option("--n,--limit", limit, "scan limit")->required();
    verify->add_option("--reference", reference);
    verify->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (step->parsed()) return cmd_step(n_text, format);
        if (traj->parsed()) return cmd_trajectory(n_text, budget, format);
        if (fsm->parsed()) return cmd_fsm(reference, out_path, cycle_limit, active_limit);
        if (drift_cmd->parsed())
            return cmd_drift(limit, out_path, bin_width, qq_k, threads, format);
        if (blocks_cmd->parsed()) return cmd_blocks(n_text, budget, format);
        if (energy_cmd->parsed()) return cmd_energy(limit, out_path, format);
        if (metrics_cmd->parsed()) return cmd_metrics(limit, budget, out_path);
        if (affine_cmd->parsed()) return cmd_affine(a_min, a_max, limit, threads, out_path);
        if (quot->parsed()) return cmd_quotient(n_text, format);
        if (bitfsm_cmd->parsed()) return cmd_bitfsm(n_text, format);
        if (bits_cmd->parsed()) return cmd_bits(n_text, budget, out_path);
        if (length_cmd->parsed()) return cmd_length(limit, budget, out_path);
        if (verify->parsed()) return cmd_verify_all(limit, reference, threads);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
