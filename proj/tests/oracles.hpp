#pragma once

// Independent reference implementations used only by the tests. Each one
// recomputes its quantity from first principles (plain double loops,
// composite quadrature, exhaustive enumeration, normal equations) so that
// library results are checked against a second route, never against
// themselves.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace oracles {

/// Lag-k autocorrelation as a literal double loop over the definition.
inline double acf_direct(std::span<const double> y, std::size_t k) {
    const std::size_t n = y.size();
    double ybar = 0.0;
    for (double v : y) ybar += v;
    ybar /= static_cast<double>(n);
    double num = 0.0;
    for (std::size_t t = k; t < n; ++t) num += (y[t] - ybar) * (y[t - k] - ybar);
    double den = 0.0;
    for (std::size_t t = 0; t < n; ++t) den += (y[t] - ybar) * (y[t] - ybar);
    return num / den;
}

/// p-th central moment with divisor n, by direct summation.
inline double central_moment(std::span<const double> y, int p) {
    double m = 0.0;
    for (double v : y) m += v;
    m /= static_cast<double>(y.size());
    double s = 0.0;
    for (double v : y) s += std::pow(v - m, p);
    return s / static_cast<double>(y.size());
}

/// Composite Simpson rule over an even number of intervals.
template <class F>
double simpson(F f, double a, double b, int intervals) {
    const double h = (b - a) / intervals;
    double s = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) {
        s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return s * h / 3.0;
}

inline double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

/// Phi by quadrature of the density from 0; error ~1e-11 over |x| <= 8.
inline double normal_cdf_quadrature(double x) {
    if (x == 0.0) return 0.5;
    return 0.5 + simpson(normal_pdf, 0.0, x, 2048);
}

/// chi-squared(2) survival function by quadrature of the density.
inline double chi2_df2_sf_quadrature(double x) {
    if (x <= 0.0) return 1.0;
    const auto pdf = [](double t) { return 0.5 * std::exp(-0.5 * t); };
    return 1.0 - simpson(pdf, 0.0, x, 4096);
}

/// Kolmogorov asymptotic survival function by long-form series summation
/// (no early truncation; extended precision accumulator).
inline double kolmogorov_sf_series(double lambda) {
    long double sum = 0.0L;
    for (int j = 1; j <= 2000; ++j) {
        const long double term =
            std::exp(static_cast<long double>(-2.0) * j * j * lambda * lambda);
        sum += (j % 2 == 1) ? term : -term;
    }
    const double value = static_cast<double>(2.0L * sum);
    return std::clamp(value, 0.0, 1.0);
}

/// Standard normal quantile by bisection on the quadrature CDF; stays
/// independent of the library's Phi.
inline double normal_quantile_quadrature(double p) {
    double lo = -10.0, hi = 10.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (normal_cdf_quadrature(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct RunsMoments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Exact mean and variance of the run count over *all* distinct arrangements
/// of n0 zeros and n1 ones (each equally likely). Feasible for n0+n1 <= ~12.
inline RunsMoments runs_enumerate(std::size_t n0, std::size_t n1) {
    std::vector<int> arrangement(n0, 0);
    arrangement.insert(arrangement.end(), n1, 1);
    long double sum = 0.0L, sumsq = 0.0L;
    std::size_t count = 0;
    do {
        int runs = 1;
        for (std::size_t i = 1; i < arrangement.size(); ++i) {
            if (arrangement[i] != arrangement[i - 1]) ++runs;
        }
        sum += runs;
        sumsq += static_cast<long double>(runs) * runs;
        ++count;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    RunsMoments m;
    m.mean = static_cast<double>(sum / count);
    m.variance = static_cast<double>(sumsq / count - (sum / count) * (sum / count));
    return m;
}

struct OlsOracle {
    std::vector<double> coefficients;
    std::vector<double> standard_errors;
};

/// OLS by explicit normal equations: invert X'X with Gauss-Jordan and solve.
/// Deliberately naive; fine for the small, well-conditioned test designs.
inline OlsOracle ols_normal_equations(const std::vector<std::vector<double>>& x,
                                      const std::vector<double>& y) {
    const std::size_t n = x.size();
    const std::size_t p = x.front().size();
    if (n <= p) throw std::invalid_argument("oracle: need more rows than columns");

    // [X'X | I] for Gauss-Jordan inversion.
    std::vector<std::vector<double>> aug(p, std::vector<double>(2 * p, 0.0));
    std::vector<double> xty(p, 0.0);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t k = 0; k < p; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += x[i][j] * x[i][k];
            aug[j][k] = s;
        }
        aug[j][p + j] = 1.0;
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += x[i][j] * y[i];
        xty[j] = s;
    }
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < p; ++r) {
            if (std::fabs(aug[r][col]) > std::fabs(aug[pivot][col])) pivot = r;
        }
        std::swap(aug[col], aug[pivot]);
        if (std::fabs(aug[col][col]) < 1e-12) {
            throw std::invalid_argument("oracle: singular normal equations");
        }
        const double d = aug[col][col];
        for (auto& v : aug[col]) v /= d;
        for (std::size_t r = 0; r < p; ++r) {
            if (r == col) continue;
            const double f = aug[r][col];
            for (std::size_t c = 0; c < 2 * p; ++c) aug[r][c] -= f * aug[col][c];
        }
    }

    OlsOracle fit;
    fit.coefficients.assign(p, 0.0);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t k = 0; k < p; ++k) fit.coefficients[j] += aug[j][p + k] * xty[k];
    }
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double fitted = 0.0;
        for (std::size_t j = 0; j < p; ++j) fitted += x[i][j] * fit.coefficients[j];
        rss += (y[i] - fitted) * (y[i] - fitted);
    }
    const double s2 = rss / static_cast<double>(n - p);
    fit.standard_errors.assign(p, 0.0);
    for (std::size_t j = 0; j < p; ++j) {
        fit.standard_errors[j] = std::sqrt(s2 * aug[j][p + j]);
    }
    return fit;
}

/// Supremum gap between the empirical CDF (at and just below each sample
/// point) and reference CDF values supplied by the caller, by counting.
template <class Cdf>
double ks_d_brute(std::span<const double> x, Cdf cdf) {
    const std::size_t n = x.size();
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double at = 0.0, below = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j] <= x[i]) at += 1.0;
            if (x[j] < x[i]) below += 1.0;
        }
        const double c = cdf(x[i]);
        d = std::max({d, at / n - c, c - below / n});
    }
    return d;
}

}  // namespace oracles
