#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "randwalk/series.hpp"

namespace randwalk {

/// Standard-error rule for ACF(k): Exact uses 1/sqrt(n-k), LargeN uses
/// 1/sqrt(n), Auto switches to LargeN once n >= 50.
enum class SeMode { Exact, LargeN, Auto };

struct AcfRow {
    std::size_t lag = 0;
    double acf = 0.0;
    double se = 0.0;
    double t = 0.0;
    bool significant_5pct = false;  ///< |t| > 1.96
};

struct AcfResult {
    std::string label;
    std::size_t n = 0;          ///< observations in the change series
    std::vector<AcfRow> rows;   ///< lags 1..max_lag
    double summary_sd = 0.0;    ///< sample SD of the per-lag ACF values
    double summary_se = 0.0;    ///< summary_sd / sqrt(#rows)
};

/**
 * Lag-k autocorrelation of the changes about their overall mean:
 *
 *   sum_{t=k+1..n} (y_t - ybar)(y_{t-k} - ybar) / sum_{t=1..n} (y_t - ybar)^2
 *
 * Lag 0 returns exactly 1. Valid lags are 0..n-2; constant series raise
 * DegenerateSeriesError.
 */
[[nodiscard]] double acf(const ChangeSeries& changes, std::size_t lag);

/// Standard error of ACF(k) for a series of n observations.
[[nodiscard]] double acf_se(std::size_t n, std::size_t lag, SeMode mode);

/// t ratio acf / se; significance is judged against +-1.96.
[[nodiscard]] double acf_t(double acf_value, double se);

/// Per-lag ACF table for lags 1..max_lag with a summary row: the sample SD
/// of the tabulated ACF values and its standard error sd/sqrt(max_lag).
[[nodiscard]] AcfResult acf_table(const ChangeSeries& changes, std::size_t max_lag = 20,
                                  SeMode se_mode = SeMode::Auto);

}  // namespace randwalk
