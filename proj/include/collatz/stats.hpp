#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace collatz {

// One-pass central-moment accumulator (count, mean, M2..M4) with associative
// merge for parallel scans.
class MomentAccumulator {
public:
    void push(double x);  // throws std::invalid_argument for non-finite x

    static MomentAccumulator merge(const MomentAccumulator& a, const MomentAccumulator& b);
    MomentAccumulator& operator+=(const MomentAccumulator& rhs);

    std::uint64_t count() const { return n_; }
    double mean() const { return mean_; }
    double m2() const { return m2_; }
    double m3() const { return m3_; }
    double m4() const { return m4_; }

private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
    double m3_ = 0.0;
    double m4_ = 0.0;
};

// Population moments; fields absent below their minimum count
// (2 for sd, 3 for skewness, 4 for kurtosis).
struct MomentSummary {
    std::uint64_t count = 0;
    std::optional<double> mean;
    std::optional<double> sd;
    std::optional<double> skewness;
    std::optional<double> excess_kurtosis;
};

MomentSummary finalize(const MomentAccumulator& acc);

struct HistogramBin {
    double bin_low;
    std::uint64_t count;
};

// Fixed-width binning anchored at origin; bins sorted, empty bins omitted.
std::vector<HistogramBin> histogram(std::span<const double> values, double bin_width,
                                    double origin);

// Inverse standard normal CDF, rational approximation (absolute error well
// under 1e-7 on (0,1)).
double inverse_normal_cdf(double p);

// Pairs (mu + sigma*Phi^-1(p_i), empirical quantile) at p_i = (i-0.5)/k,
// nearest-rank on sorted data.
std::vector<std::pair<double, double>> qq_points(std::vector<double> values, double mu,
                                                 double sigma, std::uint64_t k);

}  // namespace collatz
