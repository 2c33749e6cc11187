#include "collatz/bitfsm.hpp"

#include <stdexcept>

#include "collatz/blocks.hpp"

namespace collatz {

const char* to_string(QuotientSymbol s) {
    switch (s) {
        case QuotientSymbol::Plus0: return "+0";
        case QuotientSymbol::Plus1: return "+1";
        case QuotientSymbol::Plus2: return "+2";
        case QuotientSymbol::Induced: return "induced";
    }
    return "?";
}

namespace {

std::vector<Natural> halving_chain(Natural v) {
    std::vector<Natural> chain{v};
    while (v != 1) {
        v >>= 1;
        chain.push_back(v);
    }
    return chain;
}

}  // namespace

std::pair<std::vector<Natural>, std::vector<Natural>> quotient_chains(const Natural& n) {
    if (n < 1 || is_even(n)) throw std::domain_error("quotient_chains requires odd n >= 1");
    return {halving_chain(n), halving_chain(3 * n + 1)};
}

QuotientDecoding quotient_decode(const Natural& n) {
    auto [q, b] = quotient_chains(n);
    QuotientDecoding dec;
    dec.symbols.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i >= q.size()) {  // Rule 5: tail values induced by the longer chain
            dec.symbols.push_back(QuotientSymbol::Induced);
            continue;
        }
        if (i == 0) {  // Rule 1
            dec.symbols.push_back(QuotientSymbol::Plus1);
            continue;
        }
        const Natural& qi = q[i];
        const Natural& bi = b[i];
        if (is_odd(qi) != is_odd(bi)) {  // Rule 2
            dec.symbols.push_back(QuotientSymbol::Plus1);
            continue;
        }
        const Natural q_next = (i + 1 < q.size()) ? q[i + 1] : Natural(qi >> 1);
        if (qi >> 1 == q_next) {  // Rule 3
            if (bi == 3 * qi) {
                dec.symbols.push_back(QuotientSymbol::Plus0);
                continue;
            }
            if (bi == 3 * qi + 2) {
                dec.symbols.push_back(QuotientSymbol::Plus2);
                continue;
            }
        }
        dec.symbols.push_back(QuotientSymbol::Plus2);  // Rule 4
    }
    dec.q_chain = std::move(q);
    dec.b_chain = std::move(b);
    return dec;
}

std::string bit_window_map(std::string_view bits) {
    if (bits.size() < 2) throw std::invalid_argument("bit_window_map requires length >= 2");
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("bit_window_map: non-binary input");
    }
    // Window (b_{i+1}, b_i) maps to its high bit, scanned from the low end;
    // assembled MSB-first the output is the input without its lowest bit.
    std::string out(bits.size() - 1, '0');
    for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
        const char high = bits[bits.size() - 2 - i];
        out[out.size() - 1 - i] = (high == '1') ? '1' : '0';
    }
    return out;
}

GrowthSymbol growth_predict(const Natural& n) {
    if (n < 1 || is_even(n)) throw std::domain_error("growth_predict requires odd n >= 1");
    const std::uint64_t k = bit_length(n);
    const Natural threshold = Natural(1) << static_cast<unsigned>(k + 1);
    return (3 * n + 1 >= threshold) ? GrowthSymbol::PlusTwo : GrowthSymbol::PlusOne;
}

GrowthSymbol growth_label_heuristic(const Natural& n) {
    if (n < 1 || is_even(n)) throw std::domain_error("growth_label_heuristic requires odd n >= 1");
    const std::string bits = to_bit_string(n);
    const bool starts_10 = bits.size() >= 2 && bits[0] == '1' && bits[1] == '0';
    return starts_10 ? GrowthSymbol::PlusTwo : GrowthSymbol::PlusOne;
}

BitFsmTrace bit_fsm_trace(const Natural& n) {
    if (n < 1 || is_even(n)) throw std::domain_error("bit_fsm_trace requires odd n >= 1");
    BitFsmTrace trace;
    trace.input_bits = to_bit_string(n);
    trace.window_outputs =
        trace.input_bits.size() >= 2 ? bit_window_map(trace.input_bits) : std::string{};
    trace.growth = growth_predict(n);
    trace.heuristic = growth_label_heuristic(n);
    trace.heuristic_agrees = trace.growth == trace.heuristic;
    trace.predicted_symbols.push_back(trace.growth == GrowthSymbol::PlusTwo ? "+2" : "+1");
    const std::uint64_t halvings = trailing_zeros(3 * n + 1);
    for (std::uint64_t i = 0; i < halvings; ++i) trace.predicted_symbols.push_back("/2");
    return trace;
}

SymbolicLength symbolic_length(const Natural& n, std::uint64_t step_budget) {
    const BlockTrace trace = block_decompose(n, step_budget);
    SymbolicLength len;
    len.truncated = trace.truncated;
    for (const auto& block : trace.blocks) {
        len.l_sym += block.to_count + block.tz_count;
        len.l_classical += 2 * block.to_count + block.tz_count;
    }
    return len;
}

}  // namespace collatz
