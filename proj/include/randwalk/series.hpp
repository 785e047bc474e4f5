#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

namespace randwalk {

using YearMonth = std::chrono::year_month;

struct PricePoint {
    YearMonth month;
    double close = 0.0;
};

/// How month-end changes are derived from closes.
enum class ChangeMode { ArithmeticDiff, LogReturn };

/**
 * Ordered monthly closing values for one index.
 *
 * Construction enforces: months strictly increasing, all closes positive and
 * finite, at least three observations. Missing months are allowed; they are
 * counted in gap_months() and never imputed.
 */
class PriceSeries {
public:
    PriceSeries(std::string label, std::vector<PricePoint> points);

    const std::string& label() const { return label_; }
    const std::vector<PricePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    /// Calendar months missing between the first and last observation.
    std::size_t gap_months() const { return gap_months_; }

private:
    std::string label_;
    std::vector<PricePoint> points_;
    std::size_t gap_months_ = 0;
};

/// Month-end changes y_t derived from a price series.
struct ChangeSeries {
    std::string label;
    ChangeMode mode = ChangeMode::ArithmeticDiff;
    std::vector<double> values;

    std::size_t n() const { return values.size(); }
};

/// First differences (ArithmeticDiff) or log returns (LogReturn) of the
/// closes. The result holds size() - 1 values.
[[nodiscard]] ChangeSeries changes(const PriceSeries& series, ChangeMode mode);

[[nodiscard]] const char* to_string(ChangeMode mode);

/// Months since year zero; used for gap counting and CSV ordering.
[[nodiscard]] int month_index(YearMonth ym);

}  // namespace randwalk
