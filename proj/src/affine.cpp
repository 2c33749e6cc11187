#include "collatz/affine.hpp"

#include <cmath>
#include <stdexcept>

#include "collatz/blocks.hpp"
#include "collatz/parallel.hpp"

namespace collatz {

namespace {

void push_carry(std::vector<Natural>& digits, Natural carry) {
    while (carry > 0) {
        digits.push_back(carry % 10);
        carry /= 10;
    }
}

Natural collect(const std::vector<Natural>& digits) {
    Natural v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        v *= 10;
        v += *it;
    }
    return v;
}

}  // namespace

AffineStepInfo affine_step_simple_info(const Natural& n, const AffineParams& params) {
    if (params.a >= 10 || params.b >= 10) {
        throw std::domain_error("affine_step_simple is valid only for single-digit a and b");
    }
    if (n < 1) throw std::domain_error("affine_step_simple requires n >= 1");

    const auto in = to_digits(n);
    std::vector<Natural> out;
    out.reserve(in.size() + 2);
    AffineStepInfo info{0, 0};
    Natural carry = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
        Natural v = params.a * in[i] + carry;
        if (i == 0) v += params.b;
        out.push_back(v % 10);
        carry = v / 10;
        if (carry > info.max_carry) info.max_carry = carry;
    }
    push_carry(out, carry);
    info.value = collect(out);
    return info;
}

Natural affine_step_simple(const Natural& n, const AffineParams& params) {
    return affine_step_simple_info(n, params).value;
}

AffineStepInfo affine_step_two_phase_info(const Natural& n, const AffineParams& params) {
    if (n < 1) throw std::domain_error("affine_step_two_phase requires n >= 1");

    AffineStepInfo info{0, 0};

    // Phase 1: multiply digitwise by a.
    const auto in = to_digits(n);
    std::vector<Natural> product;
    product.reserve(in.size() + 4);
    Natural carry = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
        const Natural v = params.a * in[i] + carry;
        product.push_back(v % 10);
        carry = v / 10;
        if (carry > info.max_carry) info.max_carry = carry;
    }
    push_carry(product, carry);

    // Phase 2: digitwise addition of b.
    const auto add = to_digits(params.b);
    carry = 0;
    for (std::size_t i = 0; i < add.size() || carry > 0; ++i) {
        if (i == product.size()) product.push_back(0);
        Natural v = product[i] + carry;
        if (i < add.size()) v += add[i];
        product[i] = v % 10;
        carry = v / 10;
        if (carry > info.max_carry) info.max_carry = carry;
    }

    info.value = collect(product);
    return info;
}

Natural affine_step_two_phase(const Natural& n, const AffineParams& params) {
    return affine_step_two_phase_info(n, params).value;
}

Natural carry_bound(const AffineParams& params) {
    return (9 * params.a + params.b) / 10;
}

double drift_general(const Natural& n, std::uint64_t a) {
    if (n < 1 || is_even(n)) throw std::domain_error("drift_general requires odd n >= 1");
    if (a < 1 || a % 2 == 0) throw std::domain_error("drift_general requires odd a >= 1");

    const std::uint64_t to = trailing_ones(n);
    Natural v = n;
    for (std::uint64_t i = 0; i < to; ++i) v = (a * v + 1) >> 1;
    return static_cast<double>(to) * std::log2(static_cast<double>(a) / 2.0) -
           static_cast<double>(trailing_zeros(v));
}

std::vector<DriftScanRow> drift_scan(const std::vector<std::uint64_t>& a_values,
                                     std::uint64_t n_limit, unsigned threads) {
    if (n_limit < 3) throw std::domain_error("drift_scan requires n_limit >= 3");
    std::vector<DriftScanRow> rows;
    rows.reserve(a_values.size());
    for (std::uint64_t a : a_values) {
        if (a % 2 == 0) throw std::domain_error("drift_scan requires odd multipliers");
        struct Acc {
            double sum = 0.0;
            std::uint64_t count = 0;
        };
        const Acc acc = parallel_scan<Acc>(
            3, n_limit + 1, 2, threads,
            [a](Acc& local, std::uint64_t n) {
                local.sum += drift_general(Natural(n), a);
                ++local.count;
            },
            [](Acc& into, const Acc& from) {
                into.sum += from.sum;
                into.count += from.count;
            });
        rows.push_back(DriftScanRow{
            a, acc.count ? acc.sum / static_cast<double>(acc.count) : 0.0,
            2.0 * std::log2(static_cast<double>(a) / 2.0) - 2.0, acc.count});
    }
    return rows;
}

}  // namespace collatz
