#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "randwalk/autocorrelation.hpp"
#include "randwalk/descriptive.hpp"
#include "randwalk/distributions.hpp"
#include "randwalk/errors.hpp"
#include "randwalk/simulator.hpp"

#include "oracles.hpp"

using namespace randwalk;

namespace {

ChangeSeries make_changes(std::vector<double> values) {
    ChangeSeries ch;
    ch.label = "test";
    ch.values = std::move(values);
    return ch;
}

// Published 20-lag ACF column for one index and its published summary rows.
struct PublishedColumn {
    const char* label;
    std::vector<double> acf;
    double sd;
    double se;
};

const std::vector<PublishedColumn>& published_columns() {
    static const std::vector<PublishedColumn> columns = {
        {"LargeCap",
         {0.0090, -0.0272, 0.1041, 0.0845, 0.0010, -0.0638, 0.0149, -0.0772, -0.0046, -0.0274,
          -0.1308, -0.1058, -0.0461, -0.2006, 0.0452, -0.0116, -0.1478, -0.0271, 0.1629, -0.0005},
         0.08636,
         0.01931},
        {"SmallCap",
         {0.1257, 0.0418, 0.0389, 0.1044, 0.0636, -0.0708, 0.0336, 0.0449, -0.0088, -0.1210,
          -0.1409, -0.0952, -0.0688, -0.2174, -0.0639, -0.1345, -0.0953, -0.1127, 0.1040, 0.0638},
         0.09833,
         0.02199},
    };
    return columns;
}

}  // namespace

TEST_CASE("acf: ramp series at lag 1 gives 0.4") {
    // ybar = 3, numerator 4, denominator 10.
    CHECK(acf(make_changes({1, 2, 3, 4, 5}), 1) == Catch::Approx(0.4).margin(1e-12));
}

TEST_CASE("acf: lag 0 is exactly 1") {
    CHECK(acf(make_changes({1, 2, 3, 4, 5}), 0) == 1.0);
    CHECK(acf(make_changes({0.3, -0.1, 2.0, 5.0}), 0) == 1.0);
}

TEST_CASE("acf: domain errors") {
    CHECK_THROWS_AS(acf(make_changes({2, 2, 2, 2}), 1), DegenerateSeriesError);
    CHECK_THROWS_AS(acf(make_changes({1, 2, 3, 4, 5}), 4), InvalidInputError);
    CHECK_THROWS_AS(acf(make_changes({1, 2}), 1), InvalidInputError);
}

TEST_CASE("acf: iid simulator output stays inside the large-sample null band") {
    SimSpec spec;
    spec.model = SimModel::IidChanges;
    spec.length = 5001;  // 5000 changes
    spec.seed = 42;
    const auto ch = changes(simulate(spec), ChangeMode::ArithmeticDiff);
    REQUIRE(ch.n() == 5000);
    CHECK(std::fabs(acf(ch, 1)) <= 3.0 / std::sqrt(5000.0));
}

TEST_CASE("acf_se: published rules") {
    CHECK(acf_se(100, 1, SeMode::LargeN) == Catch::Approx(0.1).margin(1e-15));
    CHECK(acf_se(26, 1, SeMode::Exact) == Catch::Approx(0.2).margin(1e-15));
    CHECK(acf_se(118, 1, SeMode::Auto) == Catch::Approx(0.09206).margin(1e-5));
    // Auto switches at n = 50.
    CHECK(acf_se(49, 1, SeMode::Auto) == Catch::Approx(1.0 / std::sqrt(48.0)).margin(1e-15));
    CHECK(acf_se(50, 1, SeMode::Auto) == Catch::Approx(1.0 / std::sqrt(50.0)).margin(1e-15));
    CHECK_THROWS_AS(acf_se(5, 5, SeMode::Exact), InvalidInputError);
    CHECK_THROWS_AS(acf_se(5, 0, SeMode::Exact), InvalidInputError);
}

TEST_CASE("acf_t: ratio and significance threshold") {
    CHECK(acf_t(0.0, 0.25) == 0.0);
    CHECK(acf_t(0.2006, 0.09206) == Catch::Approx(2.179).margin(1e-3));
    CHECK(std::fabs(acf_t(0.2006, 0.09206)) > kTwoSidedCritical5pct);
    CHECK(acf_t(0.0090, 0.09206) == Catch::Approx(0.0978).margin(1e-3));
    CHECK(std::fabs(acf_t(0.0090, 0.09206)) < kTwoSidedCritical5pct);
    CHECK_THROWS_AS(acf_t(0.5, 0.0), InvalidInputError);
}

TEST_CASE("acf_table: summary rows reproduce the published columns") {
    for (const auto& column : published_columns()) {
        const double sd = sample_std(column.acf);
        CHECK(sd == Catch::Approx(column.sd).margin(1e-4));
        CHECK(sd / std::sqrt(20.0) == Catch::Approx(column.se).margin(1e-4));
    }
}

TEST_CASE("acf_table: rows satisfy the result invariants") {
    SimSpec spec;
    spec.length = 119;
    spec.seed = 3;
    const auto ch = changes(simulate(spec), ChangeMode::ArithmeticDiff);
    const AcfResult table = acf_table(ch, 20);

    REQUIRE(table.rows.size() == 20);
    CHECK(table.n == 118);
    CHECK(table.label == ch.label);
    std::vector<double> values;
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const AcfRow& row = table.rows[k];
        CHECK(row.lag == k + 1);
        CHECK(std::fabs(row.acf) <= 1.0);
        CHECK(row.acf == Catch::Approx(acf(ch, row.lag)).margin(1e-14));
        CHECK(row.se == Catch::Approx(acf_se(table.n, row.lag, SeMode::Auto)).margin(1e-15));
        CHECK(row.t == Catch::Approx(row.acf / row.se).margin(1e-14));
        CHECK(row.significant_5pct == (std::fabs(row.t) > kTwoSidedCritical5pct));
        values.push_back(row.acf);
    }
    CHECK(table.summary_sd == Catch::Approx(sample_std(values)).margin(1e-14));
    CHECK(table.summary_se == Catch::Approx(table.summary_sd / std::sqrt(20.0)).margin(1e-14));
}

TEST_CASE("acf_table: rejects series that are too short or flat") {
    CHECK_THROWS_AS(acf_table(make_changes({1, 2, 3}), 20), InvalidInputError);
    CHECK_THROWS_AS(acf_table(make_changes(std::vector<double>(30, 1.0)), 5),
                    DegenerateSeriesError);
    CHECK_THROWS_AS(acf_table(make_changes({1, 2, 3, 4}), 0), InvalidInputError);
}

TEST_CASE("acf: affine invariance") {
    std::mt19937_64 gen(19);
    std::normal_distribution<double> noise;
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<double> v(8 + rep % 20);
        for (double& x : v) x = noise(gen);
        const auto base = make_changes(v);
        for (double a : {2.5, -1.3}) {
            std::vector<double> mapped = v;
            for (double& x : mapped) x = a * x + 0.7;
            const auto other = make_changes(mapped);
            for (std::size_t k = 1; k + 2 <= v.size() && k <= 4; ++k) {
                CHECK(acf(other, k) == Catch::Approx(acf(base, k)).margin(1e-10));
            }
        }
    }
}

TEST_CASE("acf: matches the double-loop oracle on random short series") {
    std::mt19937_64 gen(23);
    std::uniform_int_distribution<int> len(3, 12);
    std::uniform_int_distribution<int> trit(-1, 1);
    int tested = 0;
    while (tested < 2000) {
        std::vector<double> v(static_cast<std::size_t>(len(gen)));
        for (double& x : v) x = static_cast<double>(trit(gen));
        if (effectively_constant(v)) continue;
        const auto ch = make_changes(v);
        for (std::size_t k = 1; k <= v.size() - 2; ++k) {
            CHECK(acf(ch, k) == Catch::Approx(oracles::acf_direct(v, k)).margin(1e-12));
        }
        ++tested;
    }
}
