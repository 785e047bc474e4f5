#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "randwalk/series.hpp"

namespace randwalk {

enum class SimModel { RandomWalk, Ar1, IidChanges };

struct SimSpec {
    SimModel model = SimModel::RandomWalk;
    std::size_t length = 118;  ///< number of monthly observations
    double drift = 0.0;        ///< per-month drift of the changes
    double sigma = 1.0;        ///< innovation scale
    double phi = 0.0;          ///< AR(1) coefficient, Ar1 only, |phi| < 1
    double start_price = 100.0;
    std::uint64_t seed = 1;
    YearMonth start_month{std::chrono::year(2005), std::chrono::month(9)};
    std::string label;  ///< empty -> model name
};

/**
 * Standard normal variates via the Marsaglia polar method over
 * std::mt19937_64, with uniforms built from the top 53 bits of each draw.
 * Output is a pure function of the seed within this implementation; ports
 * of the method reproduce moments but not bit streams.
 */
class PolarGaussian {
public:
    explicit PolarGaussian(std::uint64_t seed) : engine_(seed) {}
    double operator()();

private:
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

struct SimOutput {
    PriceSeries series;
    std::uint64_t seed_used;  ///< differs from spec.seed only after redraws
    unsigned redraws = 0;     ///< whole-series redraws forced by a price <= 0
};

/**
 * Generate a synthetic monthly price series.
 *
 * RandomWalk and IidChanges accumulate drift + sigma * eps_t onto the start
 * price; Ar1 accumulates changes following c_t = drift + phi c_{t-1} +
 * sigma * eps_t (previous change taken as 0 at the start). A path touching
 * a price <= 0 is discarded and redrawn whole with seed + 1.
 */
[[nodiscard]] SimOutput simulate_detailed(const SimSpec& spec);

/// simulate_detailed without the bookkeeping.
[[nodiscard]] PriceSeries simulate(const SimSpec& spec);

[[nodiscard]] const char* to_string(SimModel m);

}  // namespace randwalk
