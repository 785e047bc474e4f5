#pragma once

#include <cstddef>
#include <string>

#include "randwalk/distributions.hpp"
#include "randwalk/series.hpp"

namespace randwalk {

/// Reference distribution for the KS statistic: the raw standard normal, or
/// a normal located and scaled by the sample mean and sample SD.
enum class KsMode { RawStandardNormal, Standardized };

struct KsOutcome {
    double d = 0.0;
    PValue p;
};

struct JbOutcome {
    double jb = 0.0;
    PValue p;
    double skewness = 0.0;
    double kurtosis = 0.0;
};

struct NormalityResult {
    std::string label;
    double ks_d = 0.0;
    PValue ks_p;
    KsMode ks_mode = KsMode::Standardized;
    double jb = 0.0;
    PValue jb_p;
    double skewness = 0.0;
    double kurtosis = 0.0;
    std::size_t n = 0;
};

/**
 * Kolmogorov-Smirnov test against a normal reference.
 *
 * D takes both one-sided gaps at every sample point:
 * max_i max(F_n(x_i) - Phi(z_i), Phi(z_i) - F_n(x_i^-)). The p-value is the
 * asymptotic kolmogorov_sf(sqrt(n) * D); no small-sample or
 * estimated-parameter correction is applied.
 */
[[nodiscard]] KsOutcome ks_test(const ChangeSeries& changes, KsMode mode);

/// Jarque-Bera statistic n/6 (S^2 + (K-3)^2/4) with a chi-squared(2) null.
[[nodiscard]] JbOutcome jarque_bera(const ChangeSeries& changes);

/// Both tests bundled for one series.
[[nodiscard]] NormalityResult normality_tests(const ChangeSeries& changes, KsMode mode);

[[nodiscard]] const char* to_string(KsMode mode);

}  // namespace randwalk
