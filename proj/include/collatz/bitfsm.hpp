#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "collatz/natural.hpp"

namespace collatz {

enum class QuotientSymbol : std::uint8_t { Plus0, Plus1, Plus2, Induced };

const char* to_string(QuotientSymbol s);

// Successive floor-halvings of n and of 3n+1, both down to 1 inclusive.
// Odd n only.
std::pair<std::vector<Natural>, std::vector<Natural>> quotient_chains(const Natural& n);

struct QuotientDecoding {
    std::vector<Natural> q_chain;
    std::vector<Natural> b_chain;
    std::vector<QuotientSymbol> symbols;  // one per b_chain index
};

// Labels each index of the halving chains by first-match rules:
//   1. i = 0                                  -> Plus1
//   2. parity(q_i) != parity(b_i)             -> Plus1
//   3. clean division, b_i = 3q_i / 3q_i + 2  -> Plus0 / Plus2
//   4. dirty division                         -> Plus2
//   5. indices past the q chain (b_i in {2,1})-> Induced
QuotientDecoding quotient_decode(const Natural& n);

// Maps each adjacent bit window to its high bit; the output is the input
// with its lowest bit removed. Throws std::invalid_argument for length < 2
// or non-binary characters.
std::string bit_window_map(std::string_view bits);

enum class GrowthSymbol : std::uint8_t { PlusOne = 1, PlusTwo = 2 };

// Exact predicate: +2 iff 3n+1 >= 2^(k+1), k = bit length of n. Odd n only.
GrowthSymbol growth_predict(const Natural& n);

// Leading-bit shortcut ("10..." -> +2, otherwise +1). Disagrees with the
// exact predicate on some inputs; exposed for comparison only.
GrowthSymbol growth_label_heuristic(const Natural& n);

struct BitFsmTrace {
    std::string input_bits;              // MSB first
    std::string window_outputs;
    GrowthSymbol growth;
    GrowthSymbol heuristic;
    bool heuristic_agrees;
    std::vector<std::string> predicted_symbols;  // growth symbol then "/2" per trailing zero of 3n+1
};

BitFsmTrace bit_fsm_trace(const Natural& n);

struct SymbolicLength {
    std::uint64_t l_sym = 0;        // sum of to + tz over blocks
    std::uint64_t l_classical = 0;  // sum of 2*to + tz over blocks
    bool truncated = false;
};

// Block recursion evaluated on (to, tz) counts only.
SymbolicLength symbolic_length(const Natural& n, std::uint64_t step_budget = 100000);

}  // namespace collatz
