#include "randwalk/autocorrelation.hpp"

#include <algorithm>
#include <cmath>

#include "randwalk/descriptive.hpp"
#include "randwalk/distributions.hpp"
#include "randwalk/errors.hpp"

namespace randwalk {

namespace {

// Lag-k numerator over precomputed deviations; the shared denominator is
// the full sum of squares.
double lag_product(std::span<const double> dev, std::size_t lag) {
    double sum = 0.0;
    for (std::size_t t = lag; t < dev.size(); ++t) {
        sum += dev[t] * dev[t - lag];
    }
    return sum;
}

std::vector<double> deviations(const ChangeSeries& changes, const char* who) {
    const auto& y = changes.values;
    if (y.size() < 3) {
        throw InvalidInputError(std::string(who) + ": need at least 3 changes");
    }
    if (effectively_constant(y)) {
        throw DegenerateSeriesError(std::string(who) + ": zero-variance series");
    }
    const double m = mean(y);
    std::vector<double> dev(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) dev[i] = y[i] - m;
    return dev;
}

}  // namespace

double acf(const ChangeSeries& changes, std::size_t lag) {
    const auto dev = deviations(changes, "acf");
    if (lag > dev.size() - 2) {
        throw InvalidInputError("acf: lag " + std::to_string(lag) + " out of range for n = " +
                                std::to_string(dev.size()));
    }
    if (lag == 0) {
        return 1.0;
    }
    const double denom = lag_product(dev, 0);
    const double r = lag_product(dev, lag) / denom;
    // |r| <= 1 by Cauchy-Schwarz; clamp floating-point overshoot.
    return std::clamp(r, -1.0, 1.0);
}

double acf_se(std::size_t n, std::size_t lag, SeMode mode) {
    if (lag < 1 || n <= lag) {
        throw InvalidInputError("acf_se: need n > lag >= 1");
    }
    const bool large = mode == SeMode::LargeN || (mode == SeMode::Auto && n >= 50);
    const double denom = large ? static_cast<double>(n) : static_cast<double>(n - lag);
    return 1.0 / std::sqrt(denom);
}

double acf_t(double acf_value, double se) {
    if (!(se > 0.0)) {
        throw InvalidInputError("acf_t: standard error must be positive");
    }
    return acf_value / se;
}

AcfResult acf_table(const ChangeSeries& changes, std::size_t max_lag, SeMode se_mode) {
    if (max_lag < 1) {
        throw InvalidInputError("acf_table: max_lag must be >= 1");
    }
    const std::size_t n = changes.n();
    if (n < max_lag + 2) {
        throw InvalidInputError("acf_table: series of " + std::to_string(n) +
                                " changes is too short for max_lag " + std::to_string(max_lag));
    }
    const auto dev = deviations(changes, "acf_table");
    const double denom = lag_product(dev, 0);

    AcfResult result;
    result.label = changes.label;
    result.n = n;
    result.rows.reserve(max_lag);
    std::vector<double> acf_values;
    acf_values.reserve(max_lag);
    for (std::size_t k = 1; k <= max_lag; ++k) {
        AcfRow row;
        row.lag = k;
        row.acf = std::clamp(lag_product(dev, k) / denom, -1.0, 1.0);
        row.se = acf_se(n, k, se_mode);
        row.t = acf_t(row.acf, row.se);
        row.significant_5pct = std::fabs(row.t) > kTwoSidedCritical5pct;
        acf_values.push_back(row.acf);
        result.rows.push_back(row);
    }
    // The SD of a single value is undefined; report 0 for a one-row table.
    result.summary_sd = max_lag >= 2 ? sample_std(acf_values) : 0.0;
    result.summary_se = result.summary_sd / std::sqrt(static_cast<double>(max_lag));
    return result;
}

}  // namespace randwalk
