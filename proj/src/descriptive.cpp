#include "randwalk/descriptive.hpp"

#include <cmath>
#include <limits>

#include "randwalk/errors.hpp"

namespace randwalk {

double mean(std::span<const double> values) {
    if (values.empty()) {
        throw InvalidInputError("mean: empty input");
    }
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double centered_sum_squares(std::span<const double> values) {
    const double m = mean(values);
    double ss = 0.0;
    for (double v : values) {
        const double d = v - m;
        ss += d * d;
    }
    return ss;
}

bool effectively_constant(std::span<const double> values) {
    // A literally constant series can still leave ~ulp-sized deviations
    // after the mean is rounded, so compare the spread against the scale.
    const double m = mean(values);
    const double scale = 1.0 + std::fabs(m);
    const double tol = 1e-12 * scale;
    return centered_sum_squares(values) <= tol * tol * static_cast<double>(values.size());
}

double sample_std(std::span<const double> values) {
    if (values.size() < 2) {
        throw InvalidInputError("sample_std: need at least 2 values");
    }
    return std::sqrt(centered_sum_squares(values) / static_cast<double>(values.size() - 1));
}

namespace {

struct CentralMoments {
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;
};

CentralMoments central_moments(std::span<const double> values, const char* who) {
    if (values.size() < 3) {
        throw InvalidInputError(std::string(who) + ": need at least 3 values");
    }
    if (effectively_constant(values)) {
        throw DegenerateSeriesError(std::string(who) + ": zero-variance series");
    }
    const double m = mean(values);
    CentralMoments out;
    for (double v : values) {
        const double d = v - m;
        const double d2 = d * d;
        out.m2 += d2;
        out.m3 += d2 * d;
        out.m4 += d2 * d2;
    }
    const double n = static_cast<double>(values.size());
    out.m2 /= n;
    out.m3 /= n;
    out.m4 /= n;
    return out;
}

}  // namespace

double skewness(std::span<const double> values) {
    const auto m = central_moments(values, "skewness");
    return m.m3 / std::pow(m.m2, 1.5);
}

double kurtosis(std::span<const double> values) {
    const auto m = central_moments(values, "kurtosis");
    return m.m4 / (m.m2 * m.m2);
}

}  // namespace randwalk
