#include "randwalk/simulator.hpp"

#include <cmath>

#include "randwalk/errors.hpp"

namespace randwalk {

double PolarGaussian::operator()() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

namespace {

void validate(const SimSpec& spec) {
    if (spec.length < 3) {
        throw InvalidInputError("simulate: length must be >= 3 months");
    }
    if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma)) {
        throw InvalidInputError("simulate: sigma must be a finite value >= 0");
    }
    if (!std::isfinite(spec.drift)) {
        throw InvalidInputError("simulate: drift must be finite");
    }
    if (!(spec.start_price > 0.0) || !std::isfinite(spec.start_price)) {
        throw InvalidInputError("simulate: start price must be positive");
    }
    if (spec.model == SimModel::Ar1 && !(std::fabs(spec.phi) < 1.0)) {
        throw InvalidInputError("simulate: AR(1) coefficient must satisfy |phi| < 1");
    }
    if (!spec.start_month.ok()) {
        throw InvalidInputError("simulate: invalid start month");
    }
}

// One path attempt; empty result if a price went non-positive.
std::vector<double> draw_prices(const SimSpec& spec, std::uint64_t seed) {
    PolarGaussian gauss(seed);
    std::vector<double> prices(spec.length);
    prices[0] = spec.start_price;
    double prev_change = 0.0;
    for (std::size_t t = 1; t < spec.length; ++t) {
        double change = spec.drift + spec.sigma * gauss();
        if (spec.model == SimModel::Ar1) {
            change += spec.phi * prev_change;
            prev_change = change;
        }
        prices[t] = prices[t - 1] + change;
        if (prices[t] <= 0.0) {
            return {};
        }
    }
    return prices;
}

}  // namespace

SimOutput simulate_detailed(const SimSpec& spec) {
    validate(spec);
    constexpr unsigned kMaxRedraws = 1000;
    for (unsigned attempt = 0; attempt <= kMaxRedraws; ++attempt) {
        const std::uint64_t seed = spec.seed + attempt;
        const std::vector<double> prices = draw_prices(spec, seed);
        if (prices.empty()) {
            continue;
        }
        std::vector<PricePoint> points(spec.length);
        for (std::size_t t = 0; t < spec.length; ++t) {
            points[t] = {spec.start_month + std::chrono::months(static_cast<int>(t)), prices[t]};
        }
        std::string label = spec.label.empty() ? to_string(spec.model) : spec.label;
        return SimOutput{PriceSeries(std::move(label), std::move(points)), seed, attempt};
    }
    throw InvalidInputError(
        "simulate: no positive price path within 1000 redraws; sigma is too large "
        "relative to the start price");
}

PriceSeries simulate(const SimSpec& spec) {
    return simulate_detailed(spec).series;
}

const char* to_string(SimModel m) {
    switch (m) {
        case SimModel::Ar1:
            return "ar1";
        case SimModel::IidChanges:
            return "iid_changes";
        default:
            return "random_walk";
    }
}

}  // namespace randwalk
