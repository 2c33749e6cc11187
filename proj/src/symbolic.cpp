#include "collatz/symbolic.hpp"

#include <algorithm>

namespace collatz {

std::string DigitState::str() const {
    std::string s = "(";
    s += static_cast<char>('0' + r);
    s += ',';
    s += static_cast<char>('0' + p);
    s += ',';
    s += static_cast<char>('0' + c);
    s += ')';
    return s;
}

int delta_even(int r, int p, int c) {
    const int adjusted = r - c;
    if (adjusted < 0 || adjusted % 2 != 0) {
        throw UndefinedTransition("delta_even undefined for r=" + std::to_string(r) +
                                  " c=" + std::to_string(c));
    }
    return adjusted / 2 + 5 * p;
}

int lookup_even(int r, int p, int c) {
    // Columns indexed by the adjusted even digit, rows by next-digit parity.
    static constexpr int table[2][5] = {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}};
    const int adjusted = (((r - c) % 10) + 10) % 10;
    if (adjusted % 2 != 0) {
        throw UndefinedTransition("lookup_even undefined for r=" + std::to_string(r) +
                                  " c=" + std::to_string(c));
    }
    return table[p][adjusted / 2];
}

OddUpdate delta_odd(std::size_t i, int r, int c) {
    const int v = 3 * r + c + (i == 0 ? 1 : 0);
    return OddUpdate{v % 10, v / 10};
}

SymbolicNumber encode(const Natural& n) {
    if (n < 1) throw std::domain_error("encode requires n >= 1");
    const auto digits = to_digits(n);
    const std::size_t len = digits.size();

    SymbolicNumber s;
    s.states.resize(len);
    s.op_context = is_odd(n) ? OpContext::Odd : OpContext::Even;

    for (std::size_t i = 0; i < len; ++i) {
        s.states[i].r = digits[i];
        s.states[i].p = (i + 1 < len) ? (digits[i + 1] & 1) : 0;
    }
    if (s.op_context == OpContext::Odd) {
        int carry = 0;
        for (std::size_t i = 0; i < len; ++i) {
            s.states[i].c = static_cast<std::uint8_t>(carry);
            carry = delta_odd(i, digits[i], carry).carry;
        }
    } else {
        // The borrow consumed at digit j is that digit's own parity; c_0 = 0.
        for (std::size_t j = 1; j < len; ++j) {
            s.states[j].c = digits[j] & 1;
        }
    }
    return s;
}

Natural decode(const SymbolicNumber& s) {
    if (s.states.empty()) throw std::invalid_argument("decode: empty state sequence");
    const std::size_t len = s.states.size();
    for (std::size_t i = 0; i < len; ++i) {
        if (!s.states[i].valid()) throw std::invalid_argument("decode: field out of range");
        const std::uint8_t expected_p = (i + 1 < len) ? (s.states[i + 1].r & 1) : 0;
        if (s.states[i].p != expected_p) {
            throw std::invalid_argument("decode: parity flag does not match next digit");
        }
    }
    if (len > 1 && s.states[len - 1].r == 0) {
        throw std::invalid_argument("decode: leading zero");
    }
    std::vector<std::uint8_t> digits(len);
    for (std::size_t i = 0; i < len; ++i) digits[i] = s.states[i].r;
    return from_digits(digits);
}

bool is_canonical(const SymbolicNumber& s) {
    if (s.states.empty()) return false;
    const std::size_t len = s.states.size();
    for (const auto& st : s.states) {
        if (!st.valid()) return false;
    }
    if (len > 1 && s.states[len - 1].r == 0) return false;
    for (std::size_t i = 0; i < len; ++i) {
        const std::uint8_t expected_p = (i + 1 < len) ? (s.states[i + 1].r & 1) : 0;
        if (s.states[i].p != expected_p) return false;
    }
    if (s.states[0].c != 0) return false;
    const bool odd = (s.states[0].r & 1) != 0;
    if (odd != (s.op_context == OpContext::Odd)) return false;
    if (odd) {
        int carry = 0;
        for (std::size_t i = 0; i < len; ++i) {
            if (s.states[i].c != carry) return false;
            carry = delta_odd(i, s.states[i].r, carry).carry;
        }
    } else {
        for (std::size_t j = 1; j < len; ++j) {
            if (s.states[j].c != (s.states[j].r & 1)) return false;
        }
    }
    return true;
}

namespace detail {

DigitStepInfo step_digits(std::vector<std::uint8_t>& d) {
    DigitStepInfo info;
    const std::size_t len = d.size();
    if (d[0] & 1) {
        int carry = 0;
        for (std::size_t i = 0; i < len; ++i) {
            const OddUpdate u = delta_odd(i, d[i], carry);
            d[i] = static_cast<std::uint8_t>(u.digit);
            carry = u.carry;
            if (carry > info.max_carry) info.max_carry = carry;
        }
        if (carry > 0) {
            info.grew = true;
            info.new_top_digit = carry;  // single digit: carries stay below 10
            d.push_back(static_cast<std::uint8_t>(carry));
        }
    } else {
        for (std::size_t i = 0; i < len; ++i) {
            const int p = (i + 1 < len) ? (d[i + 1] & 1) : 0;
            const int c = (i > 0) ? (d[i] & 1) : 0;
            if (c > info.max_carry) info.max_carry = c;
            d[i] = static_cast<std::uint8_t>(delta_even(d[i], p, c));
        }
        while (d.size() > 1 && d.back() == 0) d.pop_back();
    }
    return info;
}

}  // namespace detail

namespace {

SymbolicNumber observed_states(const std::vector<std::uint8_t>& d) {
    // Post-transition view: parities from the current digits, carries 0
    // (every transition target resets its carry).
    SymbolicNumber s;
    const std::size_t len = d.size();
    s.states.resize(len);
    s.op_context = (d[0] & 1) ? OpContext::Odd : OpContext::Even;
    for (std::size_t i = 0; i < len; ++i) {
        s.states[i].r = d[i];
        s.states[i].p = (i + 1 < len) ? (d[i + 1] & 1) : 0;
        s.states[i].c = 0;
    }
    return s;
}

}  // namespace

Natural symbolic_step(const Natural& n) {
    if (n < 1) throw std::domain_error("symbolic_step requires n >= 1");
    auto digits = to_digits(n);
    detail::step_digits(digits);
    return from_digits(digits);
}

StepOutcome symbolic_step_outcome(const Natural& n) {
    if (n < 1) throw std::domain_error("symbolic_step_outcome requires n >= 1");
    auto digits = to_digits(n);
    const detail::DigitStepInfo info = detail::step_digits(digits);
    return StepOutcome{from_digits(digits), info.max_carry, info.grew, info.new_top_digit};
}

StepTrace symbolic_step_trace(const Natural& n) {
    if (n < 1) throw std::domain_error("symbolic_step_trace requires n >= 1");
    StepTrace trace;
    trace.input = n;
    const SymbolicNumber s = encode(n);
    trace.rule = s.op_context;

    std::vector<std::uint8_t> out;
    out.reserve(s.states.size() + 1);
    if (s.op_context == OpContext::Odd) {
        int carry = 0;
        for (std::size_t i = 0; i < s.states.size(); ++i) {
            const auto& st = s.states[i];
            const OddUpdate u = delta_odd(i, st.r, carry);
            trace.rows.push_back({i, st.r, st.p, st.c, u.digit, u.digit & 1, u.carry});
            out.push_back(static_cast<std::uint8_t>(u.digit));
            carry = u.carry;
            if (carry > trace.max_carry) trace.max_carry = carry;
        }
        if (carry > 0) {
            trace.digit_count_grew = true;
            trace.new_top_digit = carry;
            out.push_back(static_cast<std::uint8_t>(carry));
        }
    } else {
        for (std::size_t i = 0; i < s.states.size(); ++i) {
            const auto& st = s.states[i];
            if (st.c > trace.max_carry) trace.max_carry = st.c;
            const int digit = delta_even(st.r, st.p, st.c);
            trace.rows.push_back({i, st.r, st.p, st.c, digit, digit & 1, std::nullopt});
            out.push_back(static_cast<std::uint8_t>(digit));
        }
        while (out.size() > 1 && out.back() == 0) out.pop_back();
    }
    trace.result = from_digits(out);
    return trace;
}

Trajectory symbolic_trajectory(const Natural& n, std::uint64_t max_steps) {
    if (n < 1) throw std::domain_error("symbolic_trajectory requires n >= 1");
    if (max_steps < 1) throw std::domain_error("symbolic_trajectory requires max_steps >= 1");

    Trajectory traj;
    traj.rows.push_back({n, encode(n)});
    if (n == 1) return traj;

    auto digits = to_digits(n);
    for (std::uint64_t step = 0; step < max_steps; ++step) {
        detail::step_digits(digits);
        traj.rows.push_back({from_digits(digits), observed_states(digits)});
        if (digits.size() == 1 && digits[0] == 1) return traj;
    }
    traj.truncated = true;
    return traj;
}

}  // namespace collatz
