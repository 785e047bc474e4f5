#pragma once

#include <span>

namespace randwalk {

[[nodiscard]] double mean(std::span<const double> values);

/// Sample standard deviation with the n-1 divisor.
[[nodiscard]] double sample_std(std::span<const double> values);

/// Skewness m3 / m2^(3/2) from divisor-n central moments.
[[nodiscard]] double skewness(std::span<const double> values);

/// Kurtosis m4 / m2^2 from divisor-n central moments (normal -> 3).
[[nodiscard]] double kurtosis(std::span<const double> values);

/// Sum of squared deviations about the mean.
[[nodiscard]] double centered_sum_squares(std::span<const double> values);

/// True when the values are constant up to floating-point dust, i.e. the
/// spread is indistinguishable from rounding of a constant series.
[[nodiscard]] bool effectively_constant(std::span<const double> values);

}  // namespace randwalk
