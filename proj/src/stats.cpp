#include "collatz/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace collatz {

void MomentAccumulator::push(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("push requires a finite value");
    const std::uint64_t n1 = n_;
    ++n_;
    const double delta = x - mean_;
    const double delta_n = delta / static_cast<double>(n_);
    const double delta_n2 = delta_n * delta_n;
    const double term1 = delta * delta_n * static_cast<double>(n1);
    mean_ += delta_n;
    m4_ += term1 * delta_n2 * (static_cast<double>(n_) * n_ - 3.0 * n_ + 3.0) +
           6.0 * delta_n2 * m2_ - 4.0 * delta_n * m3_;
    m3_ += term1 * delta_n * (static_cast<double>(n_) - 2.0) - 3.0 * delta_n * m2_;
    m2_ += term1;
}

MomentAccumulator MomentAccumulator::merge(const MomentAccumulator& a, const MomentAccumulator& b) {
    if (a.n_ == 0) return b;
    if (b.n_ == 0) return a;

    MomentAccumulator out;
    const double na = static_cast<double>(a.n_);
    const double nb = static_cast<double>(b.n_);
    const double n = na + nb;
    const double delta = b.mean_ - a.mean_;
    const double delta2 = delta * delta;

    out.n_ = a.n_ + b.n_;
    out.mean_ = (na * a.mean_ + nb * b.mean_) / n;
    out.m2_ = a.m2_ + b.m2_ + delta2 * na * nb / n;
    out.m3_ = a.m3_ + b.m3_ + delta2 * delta * na * nb * (na - nb) / (n * n) +
              3.0 * delta * (na * b.m2_ - nb * a.m2_) / n;
    out.m4_ = a.m4_ + b.m4_ +
              delta2 * delta2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
              6.0 * delta2 * (na * na * b.m2_ + nb * nb * a.m2_) / (n * n) +
              4.0 * delta * (na * b.m3_ - nb * a.m3_) / n;
    return out;
}

MomentAccumulator& MomentAccumulator::operator+=(const MomentAccumulator& rhs) {
    *this = merge(*this, rhs);
    return *this;
}

MomentSummary finalize(const MomentAccumulator& acc) {
    MomentSummary s;
    s.count = acc.count();
    if (s.count >= 1) s.mean = acc.mean();
    if (s.count >= 2) {
        const double sd = std::sqrt(acc.m2() / static_cast<double>(s.count));
        s.sd = sd;
        if (s.count >= 3 && sd > 0.0) {
            s.skewness = (acc.m3() / static_cast<double>(s.count)) / (sd * sd * sd);
        }
        if (s.count >= 4 && sd > 0.0) {
            s.excess_kurtosis = (acc.m4() / static_cast<double>(s.count)) / (sd * sd * sd * sd) - 3.0;
        }
    }
    return s;
}

std::vector<HistogramBin> histogram(std::span<const double> values, double bin_width,
                                    double origin) {
    if (!(bin_width > 0.0)) throw std::invalid_argument("histogram requires bin_width > 0");
    std::map<std::int64_t, std::uint64_t> bins;
    for (double x : values) {
        const auto idx = static_cast<std::int64_t>(std::floor((x - origin) / bin_width));
        ++bins[idx];
    }
    std::vector<HistogramBin> out;
    out.reserve(bins.size());
    for (const auto& [idx, count] : bins) {
        out.push_back(HistogramBin{origin + static_cast<double>(idx) * bin_width, count});
    }
    return out;
}

double inverse_normal_cdf(double p) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw std::invalid_argument("inverse_normal_cdf requires p in (0,1)");
    }
    // Acklam's rational approximation with one Halley refinement step.
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // Halley step against the exact CDF.
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    x = x - u / (1.0 + x * u / 2.0);
    return x;
}

std::vector<std::pair<double, double>> qq_points(std::vector<double> values, double mu,
                                                 double sigma, std::uint64_t k) {
    if (!(sigma > 0.0)) throw std::invalid_argument("qq_points requires sigma > 0");
    if (k < 1) throw std::invalid_argument("qq_points requires k >= 1");
    if (values.empty()) throw std::invalid_argument("qq_points requires a non-empty stream");

    std::sort(values.begin(), values.end());
    const auto n = values.size();
    std::vector<std::pair<double, double>> out;
    out.reserve(k);
    for (std::uint64_t i = 1; i <= k; ++i) {
        const double p = (static_cast<double>(i) - 0.5) / static_cast<double>(k);
        auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
        if (rank < 1) rank = 1;
        if (rank > n) rank = n;
        out.emplace_back(mu + sigma * inverse_normal_cdf(p), values[rank - 1]);
    }
    return out;
}

}  // namespace collatz
