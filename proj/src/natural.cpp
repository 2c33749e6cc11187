#include "collatz/natural.hpp"

#include <cmath>
#include <stdexcept>

namespace collatz {

std::vector<std::uint8_t> to_digits(const Natural& n) {
    std::vector<std::uint8_t> digits;
    if (n == 0) {
        digits.push_back(0);
        return digits;
    }
    Natural v = n;
    while (v != 0) {
        digits.push_back(static_cast<std::uint8_t>(v % 10));
        v /= 10;
    }
    return digits;
}

Natural from_digits(const std::vector<std::uint8_t>& digits) {
    Natural v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it > 9) throw std::invalid_argument("digit out of range");
        v *= 10;
        v += *it;
    }
    return v;
}

std::string to_bit_string(const Natural& n) {
    if (n == 0) return "0";
    const std::uint64_t len = bit_length(n);
    std::string out(len, '0');
    for (std::uint64_t i = 0; i < len; ++i) {
        if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i))) {
            out[len - 1 - i] = '1';
        }
    }
    return out;
}

double log2_natural(const Natural& n) {
    if (n <= 0) throw std::domain_error("log2 of non-positive value");
    const std::uint64_t bits = bit_length(n);
    if (bits <= 53) return std::log2(n.convert_to<double>());
    const std::uint64_t shift = bits - 53;
    const Natural mantissa = n >> static_cast<unsigned>(shift);
    return static_cast<double>(shift) + std::log2(mantissa.convert_to<double>());
}

}  // namespace collatz
