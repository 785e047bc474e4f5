#include "randwalk/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "randwalk/errors.hpp"

namespace randwalk {

double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double chi2_df2_sf(double x) {
    if (std::isnan(x) || x < 0.0) {
        throw InvalidInputError("chi2_df2_sf: x must be >= 0");
    }
    return std::exp(-0.5 * x);
}

double kolmogorov_sf(double lambda) {
    // Below 0.05 the survival function exceeds 1 - 1e-16; the alternating
    // series would also need thousands of terms there.
    if (lambda < 0.05) {
        return 1.0;
    }
    const double ll = lambda * lambda;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100000; ++j) {
        const double term = std::exp(-2.0 * static_cast<double>(j) * j * ll);
        if (term < 1e-12) break;
        sum += sign * term;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

PValue two_sided_normal_pvalue(double z) {
    PValue p;
    p.value = std::clamp(2.0 * (1.0 - std_normal_cdf(std::fabs(z))), 0.0, 1.0);
    p.sided = Sided::Two;
    p.method = "normal-asymptotic";
    return p;
}

const char* to_string(Sided sided) {
    return sided == Sided::One ? "one" : "two";
}

}  // namespace randwalk
