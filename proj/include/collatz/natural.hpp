#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace collatz {

// Arbitrary-precision non-negative integer. Scan limits and step budgets use
// std::uint64_t; values themselves may grow past 64 bits.
using Natural = boost::multiprecision::cpp_int;

inline bool is_odd(const Natural& n) { return boost::multiprecision::bit_test(n, 0); }
inline bool is_even(const Natural& n) { return !is_odd(n); }

// beta(n) = floor(log2 n) + 1; beta(0) = 0.
inline std::uint64_t bit_length(const Natural& n) {
    if (n == 0) return 0;
    return boost::multiprecision::msb(n) + 1;
}

// Classical map: n/2 for even n, 3n+1 for odd n.
inline Natural collatz_t(const Natural& n) {
    return is_even(n) ? Natural(n >> 1) : Natural(3 * n + 1);
}

// Little-endian base-10 digits; 0 encodes as {0}.
std::vector<std::uint8_t> to_digits(const Natural& n);
Natural from_digits(const std::vector<std::uint8_t>& digits);

// MSB-first binary string, e.g. 23 -> "10111".
std::string to_bit_string(const Natural& n);

// log2(n) as double, valid for any bit length.
double log2_natural(const Natural& n);

}  // namespace collatz
