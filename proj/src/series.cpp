#include "randwalk/series.hpp"

#include <cmath>
#include <utility>

#include "randwalk/errors.hpp"

namespace randwalk {

int month_index(YearMonth ym) {
    return static_cast<int>(ym.year()) * 12 + static_cast<int>(static_cast<unsigned>(ym.month())) - 1;
}

PriceSeries::PriceSeries(std::string label, std::vector<PricePoint> points)
    : label_(std::move(label)), points_(std::move(points)) {
    if (points_.size() < 3) {
        throw InvalidInputError("price series '" + label_ +
                                "' needs at least 3 observations, got " +
                                std::to_string(points_.size()));
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const double close = points_[i].close;
        if (!std::isfinite(close) || close <= 0.0) {
            throw InvalidInputError("price series '" + label_ + "' has a non-positive close at position " +
                                    std::to_string(i));
        }
        if (!points_[i].month.ok()) {
            throw InvalidInputError("price series '" + label_ + "' has an invalid month at position " +
                                    std::to_string(i));
        }
        if (i > 0) {
            const int step = month_index(points_[i].month) - month_index(points_[i - 1].month);
            if (step <= 0) {
                throw InvalidInputError("price series '" + label_ +
                                        "' has non-increasing months at position " + std::to_string(i));
            }
            gap_months_ += static_cast<std::size_t>(step - 1);
        }
    }
}

ChangeSeries changes(const PriceSeries& series, ChangeMode mode) {
    const auto& pts = series.points();
    ChangeSeries out;
    out.label = series.label();
    out.mode = mode;
    out.values.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (mode == ChangeMode::ArithmeticDiff) {
            out.values.push_back(pts[i].close - pts[i - 1].close);
        } else {
            out.values.push_back(std::log(pts[i].close / pts[i - 1].close));
        }
    }
    return out;
}

const char* to_string(ChangeMode mode) {
    return mode == ChangeMode::ArithmeticDiff ? "arithmetic_diff" : "log_return";
}

}  // namespace randwalk
