#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "collatz/affine.hpp"
#include "collatz/bitfsm.hpp"
#include "collatz/blocks.hpp"
#include "collatz/fsm_graph.hpp"
#include "collatz/stats.hpp"
#include "collatz/symbolic.hpp"

namespace py = pybind11;
using namespace collatz;

namespace pybind11::detail {

// Natural <-> python int via decimal strings, both directions exact.
template <>
struct type_caster<Natural> {
    PYBIND11_TYPE_CASTER(Natural, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        if (PyObject* repr = PyObject_Str(src.ptr())) {
            const std::string text = py::reinterpret_steal<py::str>(repr);
            if (!text.empty() && text[0] == '-') return false;
            value = Natural(text);
            return true;
        }
        return false;
    }

    static handle cast(const Natural& src, return_value_policy, handle) {
        return PyLong_FromString(src.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

py::tuple state_tuple(const DigitState& s) { return py::make_tuple(s.r, s.p, s.c); }

py::list states_list(const SymbolicNumber& s) {
    py::list out;
    for (const auto& st : s.states) out.append(state_tuple(st));
    return out;
}

const char* growth_str(GrowthSymbol g) { return g == GrowthSymbol::PlusTwo ? "+2" : "+1"; }

}  // namespace

PYBIND11_MODULE(collatzfsm, m) {
    m.doc() = "Digitwise finite-state laboratory for the 3n+1 map";

    // Digitwise core.
    m.def("symbolic_step", &symbolic_step, py::arg("n"),
          "One application of the map computed digit by digit");
    m.def(
        "encode",
        [](const Natural& n) {
            const SymbolicNumber s = encode(n);
            return py::make_tuple(states_list(s),
                                  s.op_context == OpContext::Odd ? "odd" : "even");
        },
        py::arg("n"), "Digit states (r, p, c) little-endian plus the active rule");
    m.def(
        "decode",
        [](const std::vector<std::tuple<int, int, int>>& states) {
            SymbolicNumber s;
            for (const auto& [r, p, c] : states) {
                s.states.push_back(DigitState{static_cast<std::uint8_t>(r),
                                              static_cast<std::uint8_t>(p),
                                              static_cast<std::uint8_t>(c)});
            }
            if (!s.states.empty() && (s.states[0].r & 1) == 0) s.op_context = OpContext::Even;
            return decode(s);
        },
        py::arg("states"));
    m.def("delta_even", &delta_even, py::arg("r"), py::arg("p"), py::arg("c"));
    m.def("lookup_even", &lookup_even, py::arg("r"), py::arg("p"), py::arg("c"));
    m.def(
        "delta_odd",
        [](std::size_t i, int r, int c) {
            const OddUpdate u = delta_odd(i, r, c);
            return py::make_tuple(u.digit, u.carry);
        },
        py::arg("i"), py::arg("r"), py::arg("c"));
    m.def(
        "trajectory",
        [](const Natural& n, std::uint64_t max_steps) {
            const Trajectory t = symbolic_trajectory(n, max_steps);
            py::list rows;
            for (const auto& row : t.rows) {
                rows.append(py::make_tuple(row.value, states_list(row.states)));
            }
            return py::make_tuple(rows, t.truncated);
        },
        py::arg("n"), py::arg("max_steps") = 100000,
        "Rows (value, states); row 0 carries the encoding, later rows the "
        "post-transition states");

    // Graph.
    m.def("enumerate_states", [] {
        py::list out;
        for (const auto& s : enumerate_states()) out.append(state_tuple(s));
        return out;
    });
    m.def("transition_table", [] {
        const TransitionTable t = build_table();
        py::dict out;
        for (const auto& row : t.rows) {
            py::list div, mul;
            for (const auto& d : row.div) div.append(state_tuple(d));
            for (const auto& x : row.mul) mul.append(state_tuple(x));
            out[state_tuple(row.state)] = py::make_tuple(div, mul);
        }
        return out;
    });
    m.def("ranking", [] {
        const RankAssignment rank = ranking(build_table());
        py::dict out;
        for (const auto& s : enumerate_states()) out[state_tuple(s)] = rank(s);
        return out;
    });
    m.def(
        "cycles",
        [](int max_len) {
            py::list out;
            for (const auto& cycle : find_cycles(build_table(), max_len)) {
                py::list one;
                for (const auto& s : cycle) one.append(state_tuple(s));
                out.append(one);
            }
            return out;
        },
        py::arg("max_len") = 8);
    m.def(
        "active_states",
        [](std::uint64_t n_limit) {
            py::list out;
            for (const auto& s : active_subgraph(n_limit)) out.append(state_tuple(s));
            return out;
        },
        py::arg("n_limit"));

    // Binary blocks.
    m.def("trailing_ones", &trailing_ones, py::arg("n"));
    m.def("trailing_zeros", &trailing_zeros, py::arg("n"));
    m.def("t3", &t3, py::arg("n"));
    m.def(
        "blocks",
        [](const Natural& n, std::uint64_t budget) {
            const BlockTrace t = block_decompose(n, budget);
            py::list out;
            for (const auto& b : t.blocks) {
                out.append(py::make_tuple(b.to_count, b.tz_count, b.n_start, b.n_prime));
            }
            return py::make_tuple(out, t.classical_steps, t.truncated);
        },
        py::arg("n"), py::arg("budget") = 100000);
    m.def("drift", [](const Natural& n) { return drift(n).w; }, py::arg("n"));
    m.def("energy", &energy, py::arg("n"), py::arg("n0"));
    m.def(
        "bit_growth",
        [](const Natural& n) {
            const BitGrowth g = bit_growth_check(n);
            return py::make_tuple(g.beta_in, g.beta_out, g.ok);
        },
        py::arg("n"));
    m.def(
        "orbit_metrics",
        [](const Natural& n, std::uint64_t budget) {
            const OrbitMetrics m = orbit_metrics(n, budget);
            py::dict out;
            out["t_end"] = m.t_end;
            out["l_peak"] = m.l_peak;
            out["t_peak"] = m.t_peak;
            out["t_eff"] = m.t_eff_defined ? py::cast(m.t_eff) : py::none();
            out["constraint_holds"] = m.constraint_holds;
            out["truncated"] = m.truncated;
            return out;
        },
        py::arg("n"), py::arg("budget") = 100000);
    m.def(
        "bit_table",
        [](const Natural& n, std::uint64_t budget) {
            py::list out;
            for (const auto& row : bit_table(n, budget).rows) {
                out.append(py::make_tuple(row.step, row.value, row.bits, row.bit_count, row.tz));
            }
            return out;
        },
        py::arg("n"), py::arg("budget") = 100000);

    // Affine generalization.
    m.def(
        "affine_step_simple",
        [](const Natural& n, const Natural& a, const Natural& b) {
            return affine_step_simple(n, {a, b});
        },
        py::arg("n"), py::arg("a"), py::arg("b"));
    m.def(
        "affine_step",
        [](const Natural& n, const Natural& a, const Natural& b) {
            return affine_step_two_phase(n, {a, b});
        },
        py::arg("n"), py::arg("a"), py::arg("b"), "Two-phase digitwise a*n + b");
    m.def(
        "carry_bound",
        [](const Natural& a, const Natural& b) { return carry_bound({a, b}); },
        py::arg("a"), py::arg("b"));
    m.def("drift_general", &drift_general, py::arg("n"), py::arg("a"));

    // Binary FSM variants.
    m.def(
        "quotient_decode",
        [](const Natural& n) {
            const QuotientDecoding dec = quotient_decode(n);
            py::list syms;
            for (const auto& s : dec.symbols) syms.append(to_string(s));
            return py::make_tuple(dec.q_chain, dec.b_chain, syms);
        },
        py::arg("n"));
    m.def("bit_window_map", &bit_window_map, py::arg("bits"));
    m.def(
        "growth_predict",
        [](const Natural& n) { return growth_str(growth_predict(n)); },
        py::arg("n"));
    m.def(
        "symbolic_length",
        [](const Natural& n, std::uint64_t budget) {
            const SymbolicLength len = symbolic_length(n, budget);
            return py::make_tuple(len.l_sym, len.l_classical, len.truncated);
        },
        py::arg("n"), py::arg("budget") = 100000);

    // Streaming moments.
    py::class_<MomentAccumulator>(m, "MomentAccumulator")
        .def(py::init<>())
        .def("push", &MomentAccumulator::push)
        .def_static("merge", &MomentAccumulator::merge)
        .def_property_readonly("count", &MomentAccumulator::count)
        .def_property_readonly("mean", &MomentAccumulator::mean)
        .def("summary", [](const MomentAccumulator& acc) {
            const MomentSummary s = finalize(acc);
            py::dict out;
            out["count"] = s.count;
            out["mean"] = s.mean ? py::cast(*s.mean) : py::none();
            out["sd"] = s.sd ? py::cast(*s.sd) : py::none();
            out["skewness"] = s.skewness ? py::cast(*s.skewness) : py::none();
            out["excess_kurtosis"] =
                s.excess_kurtosis ? py::cast(*s.excess_kurtosis) : py::none();
            return out;
        });
    m.def(
        "histogram",
        [](const std::vector<double>& values, double bin_width, double origin) {
            py::list out;
            for (const auto& b : histogram(values, bin_width, origin)) {
                out.append(py::make_tuple(b.bin_low, b.count));
            }
            return out;
        },
        py::arg("values"), py::arg("bin_width"), py::arg("origin") = 0.0);
    m.def("qq_points", &qq_points, py::arg("values"), py::arg("mu"), py::arg("sigma"),
          py::arg("k"));
    m.def("inverse_normal_cdf", &inverse_normal_cdf, py::arg("p"));
}
