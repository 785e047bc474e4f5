#include "randwalk/normality.hpp"

#include <algorithm>
#include <cmath>

#include "randwalk/descriptive.hpp"
#include "randwalk/errors.hpp"

namespace randwalk {

KsOutcome ks_test(const ChangeSeries& changes, KsMode mode) {
    const std::size_t n = changes.n();
    if (n < 5) {
        throw InvalidInputError("ks_test: need at least 5 changes");
    }
    std::vector<double> z = changes.values;
    if (mode == KsMode::Standardized) {
        if (effectively_constant(z)) {
            throw DegenerateSeriesError("ks_test: zero-variance series in standardized mode");
        }
        const double m = mean(z);
        const double s = sample_std(z);
        for (double& v : z) v = (v - m) / s;
    }
    std::sort(z.begin(), z.end());

    // Both one-sided gaps at every point: the empirical CDF steps from i/n
    // to (i+1)/n at z[i], the reference CDF is continuous.
    double d = 0.0;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double cdf = std_normal_cdf(z[i]);
        const double upper = static_cast<double>(i + 1) * inv_n - cdf;
        const double lower = cdf - static_cast<double>(i) * inv_n;
        d = std::max({d, upper, lower});
    }

    KsOutcome out;
    out.d = d;
    out.p.value = kolmogorov_sf(std::sqrt(static_cast<double>(n)) * d);
    out.p.sided = Sided::One;
    out.p.method = "kolmogorov-asymptotic";
    return out;
}

JbOutcome jarque_bera(const ChangeSeries& changes) {
    const std::size_t n = changes.n();
    if (n < 8) {
        throw InvalidInputError("jarque_bera: need at least 8 changes");
    }
    JbOutcome out;
    out.skewness = skewness(changes.values);  // raises on zero variance
    out.kurtosis = kurtosis(changes.values);
    const double excess = out.kurtosis - 3.0;
    out.jb = static_cast<double>(n) / 6.0 * (out.skewness * out.skewness + excess * excess / 4.0);
    out.p.value = chi2_df2_sf(out.jb);
    out.p.sided = Sided::One;
    out.p.method = "chi2-df2-asymptotic";
    return out;
}

NormalityResult normality_tests(const ChangeSeries& changes, KsMode mode) {
    NormalityResult result;
    result.label = changes.label;
    result.n = changes.n();
    result.ks_mode = mode;
    const KsOutcome ks = ks_test(changes, mode);
    result.ks_d = ks.d;
    result.ks_p = ks.p;
    const JbOutcome jb = jarque_bera(changes);
    result.jb = jb.jb;
    result.jb_p = jb.p;
    result.skewness = jb.skewness;
    result.kurtosis = jb.kurtosis;
    return result;
}

const char* to_string(KsMode mode) {
    return mode == KsMode::RawStandardNormal ? "raw_standard_normal" : "standardized";
}

}  // namespace randwalk
