#include "randwalk/unit_root.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "randwalk/errors.hpp"

namespace randwalk {

OlsFit ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& response) {
    const auto rows = design.rows();
    const auto cols = design.cols();
    if (cols < 1 || response.size() != rows) {
        throw InvalidInputError("ols: design and response dimensions do not match");
    }
    if (rows < cols + 1) {
        throw InvalidInputError("ols: need at least one more row than regressors");
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-10);
    if (qr.rank() < cols) {
        throw SingularDesignError("ols: design matrix is rank deficient");
    }

    OlsFit fit;
    fit.coefficients = qr.solve(response);
    fit.residuals = response - design * fit.coefficients;
    fit.nobs = static_cast<std::size_t>(rows);
    fit.dof = static_cast<std::size_t>(rows - cols);
    const double s2 = fit.residuals.squaredNorm() / static_cast<double>(fit.dof);

    // With X P = Q R, (X'X)^-1 = P R^-1 R^-T P'.
    const Eigen::MatrixXd r_inv = qr.matrixR()
                                      .topLeftCorner(cols, cols)
                                      .triangularView<Eigen::Upper>()
                                      .solve(Eigen::MatrixXd::Identity(cols, cols));
    Eigen::MatrixXd gram_inv = r_inv * r_inv.transpose();
    gram_inv = qr.colsPermutation() * gram_inv * qr.colsPermutation().transpose();

    fit.standard_errors = (s2 * gram_inv.diagonal().array()).sqrt();
    fit.t_stats = fit.coefficients.array() / fit.standard_errors.array();
    return fit;
}

AdfResult adf(std::span<const double> values, std::size_t lags, Deterministic deterministic) {
    const std::size_t length = values.size();
    if (length < lags + 10) {
        throw InvalidInputError("adf: series of length " + std::to_string(length) +
                                " is too short for " + std::to_string(lags) + " lags");
    }
    const std::size_t nobs = length - 1 - lags;
    const std::size_t n_det = deterministic == Deterministic::Constant ? 1 : 2;
    const std::size_t n_cols = n_det + 1 + lags;

    Eigen::MatrixXd design(nobs, n_cols);
    Eigen::VectorXd response(nobs);
    for (std::size_t i = 0; i < nobs; ++i) {
        const std::size_t t = lags + 1 + i;
        response(i) = values[t] - values[t - 1];
        std::size_t c = 0;
        design(i, c++) = 1.0;
        if (deterministic == Deterministic::ConstantTrend) {
            design(i, c++) = static_cast<double>(t);
        }
        design(i, c++) = values[t - 1];
        for (std::size_t j = 1; j <= lags; ++j) {
            design(i, c++) = values[t - j] - values[t - j - 1];
        }
    }

    const OlsFit fit = ols(design, response);
    AdfResult result;
    result.statistic = fit.t_stats(n_det);  // coefficient on the lagged level
    result.lags = lags;
    result.nobs_included = nobs;
    result.deterministic = deterministic;
    // The tau table's smallest-sample row already covers everything under 25
    // observations, so very short regressions reuse it rather than fail.
    const std::size_t table_nobs = std::max<std::size_t>(nobs, 20);
    result.critical_values = adf_critical_values(deterministic, table_nobs);
    const AdfPValue pv = adf_pvalue(result.statistic, deterministic, table_nobs);
    result.p = pv.p;
    result.bound = pv.bound;
    return result;
}

namespace {

// Dickey-Fuller tau critical values for the unit-root t ratio (Fuller,
// "Introduction to Statistical Time Series", 1976, table 8.5.2): rows are
// sample sizes 25/50/100/250/500 plus the asymptotic limit.
struct CvRow {
    double inv_n;  // 1/n, 0 for the asymptotic row
    DfCriticalValues cv;
};

constexpr std::array<CvRow, 6> kConstantRows = {{
    {1.0 / 25.0, {-3.75, -3.00, -2.63}},
    {1.0 / 50.0, {-3.58, -2.93, -2.60}},
    {1.0 / 100.0, {-3.51, -2.89, -2.58}},
    {1.0 / 250.0, {-3.46, -2.88, -2.57}},
    {1.0 / 500.0, {-3.44, -2.87, -2.57}},
    {0.0, {-3.43, -2.86, -2.57}},
}};

constexpr std::array<CvRow, 6> kConstantTrendRows = {{
    {1.0 / 25.0, {-4.38, -3.60, -3.24}},
    {1.0 / 50.0, {-4.15, -3.50, -3.18}},
    {1.0 / 100.0, {-4.04, -3.45, -3.15}},
    {1.0 / 250.0, {-3.99, -3.43, -3.13}},
    {1.0 / 500.0, {-3.98, -3.42, -3.13}},
    {0.0, {-3.96, -3.41, -3.12}},
}};

}  // namespace

DfCriticalValues adf_critical_values(Deterministic deterministic, std::size_t nobs) {
    if (nobs < 20) {
        throw InvalidInputError("adf_critical_values: table starts at 20 observations");
    }
    const auto& rows =
        deterministic == Deterministic::Constant ? kConstantRows : kConstantTrendRows;
    const double inv_n = 1.0 / static_cast<double>(nobs);
    if (inv_n >= rows.front().inv_n) {
        return rows.front().cv;
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (inv_n >= rows[i].inv_n) {
            const auto& lo = rows[i - 1];
            const auto& hi = rows[i];
            const double w = (inv_n - lo.inv_n) / (hi.inv_n - lo.inv_n);
            return DfCriticalValues{
                lo.cv.pct1 + w * (hi.cv.pct1 - lo.cv.pct1),
                lo.cv.pct5 + w * (hi.cv.pct5 - lo.cv.pct5),
                lo.cv.pct10 + w * (hi.cv.pct10 - lo.cv.pct10),
            };
        }
    }
    return rows.back().cv;
}

AdfPValue adf_pvalue(double statistic, Deterministic deterministic, std::size_t nobs) {
    if (nobs < 20) {
        throw InvalidInputError("adf_pvalue: need at least 20 observations");
    }
    const DfCriticalValues cv = adf_critical_values(deterministic, nobs);
    AdfPValue out;
    out.p.sided = Sided::One;
    out.p.method = "dickey-fuller-table";
    if (statistic < cv.pct1) {
        out.p.value = 0.01;
        out.bound = TailBound::BelowTable;
    } else if (statistic > cv.pct10) {
        out.p.value = 0.10;
        out.bound = TailBound::AboveTable;
    } else if (statistic <= cv.pct5) {
        out.p.value = 0.01 + (statistic - cv.pct1) * 0.04 / (cv.pct5 - cv.pct1);
        out.bound = TailBound::Interpolated;
    } else {
        out.p.value = 0.05 + (statistic - cv.pct5) * 0.05 / (cv.pct10 - cv.pct5);
        out.bound = TailBound::Interpolated;
    }
    return out;
}

const char* to_string(Deterministic d) {
    return d == Deterministic::Constant ? "constant" : "constant_trend";
}

const char* to_string(TailBound b) {
    switch (b) {
        case TailBound::BelowTable:
            return "below_table";
        case TailBound::AboveTable:
            return "above_table";
        default:
            return "interpolated";
    }
}

}  // namespace randwalk
