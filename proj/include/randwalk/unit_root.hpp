#pragma once

#include <cstddef>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "randwalk/distributions.hpp"

namespace randwalk {

struct OlsFit {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd standard_errors;
    Eigen::VectorXd t_stats;  ///< coefficients ./ standard_errors
    Eigen::VectorXd residuals;
    std::size_t nobs = 0;
    std::size_t dof = 0;  ///< nobs - #regressors
};

/**
 * Ordinary least squares via column-pivoted Householder QR.
 *
 * Standard errors come from s^2 (X'X)^-1 with s^2 = RSS / dof. Requires
 * rows >= columns + 1 and a full-column-rank design (relative pivot
 * tolerance 1e-10); violations raise InvalidInputError / SingularDesignError.
 */
[[nodiscard]] OlsFit ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& response);

/// Deterministic terms included in the test regression.
enum class Deterministic { Constant, ConstantTrend };

/// Position of a statistic relative to the embedded critical-value table.
enum class TailBound { Interpolated, BelowTable, AboveTable };

struct DfCriticalValues {
    double pct1 = 0.0;
    double pct5 = 0.0;
    double pct10 = 0.0;
};

struct AdfResult {
    std::string label;
    double statistic = 0.0;  ///< t ratio on the lagged level
    PValue p;
    TailBound bound = TailBound::Interpolated;
    std::size_t lags = 0;
    std::size_t nobs_included = 0;  ///< series length - 1 - lags
    Deterministic deterministic = Deterministic::Constant;
    DfCriticalValues critical_values;
};

/**
 * Augmented Dickey-Fuller test: regress dy_t on [constant, (trend),
 * y_{t-1}, dy_{t-1}, ..., dy_{t-lags}] and report the t ratio on y_{t-1}.
 * The unit-root null is rejected for large negative statistics. Needs
 * length >= lags + 10; below 21 included observations the critical values
 * and p come from the smallest-sample table row.
 */
[[nodiscard]] AdfResult adf(std::span<const double> values, std::size_t lags = 1,
                            Deterministic deterministic = Deterministic::Constant);

struct AdfPValue {
    PValue p;
    TailBound bound = TailBound::Interpolated;
};

/// p interpolated linearly between the 1%/5%/10% critical values at the
/// given sample size; statistics outside the table clamp to the boundary
/// value with the matching bound flag.
[[nodiscard]] AdfPValue adf_pvalue(double statistic, Deterministic deterministic,
                                   std::size_t nobs);

/// Dickey-Fuller critical values interpolated in 1/n between the embedded
/// finite-sample rows (n = 25, 50, 100, 250, 500) and the asymptotic row.
[[nodiscard]] DfCriticalValues adf_critical_values(Deterministic deterministic,
                                                   std::size_t nobs);

[[nodiscard]] const char* to_string(Deterministic d);
[[nodiscard]] const char* to_string(TailBound b);

}  // namespace randwalk
