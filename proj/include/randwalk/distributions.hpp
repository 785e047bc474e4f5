#pragma once

#include <string>

namespace randwalk {

/// Two-sided 5% critical value of the standard normal. The whole battery
/// tests significance against this fixed threshold.
inline constexpr double kTwoSidedCritical5pct = 1.96;

enum class Sided { One, Two };

struct PValue {
    double value = 1.0;
    Sided sided = Sided::Two;
    std::string method;
};

/// Standard normal CDF. Absolute error below 1e-7 for |x| <= 8.
[[nodiscard]] double std_normal_cdf(double x);

/// Survival function of chi-squared with 2 degrees of freedom, exp(-x/2).
/// Throws InvalidInputError for negative x.
[[nodiscard]] double chi2_df2_sf(double x);

/// Asymptotic Kolmogorov distribution survival function
/// 2 * sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2),
/// truncated once a term drops below 1e-12 and clamped to [0, 1].
[[nodiscard]] double kolmogorov_sf(double lambda);

/// 2 * (1 - Phi(|z|)) tagged "normal-asymptotic".
[[nodiscard]] PValue two_sided_normal_pvalue(double z);

[[nodiscard]] const char* to_string(Sided sided);

}  // namespace randwalk
