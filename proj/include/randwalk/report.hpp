#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "randwalk/autocorrelation.hpp"
#include "randwalk/normality.hpp"
#include "randwalk/runs_test.hpp"
#include "randwalk/series.hpp"
#include "randwalk/unit_root.hpp"

namespace randwalk {

struct AnalysisConfig {
    ChangeMode change_mode = ChangeMode::ArithmeticDiff;
    std::size_t max_lag = 20;
    std::size_t adf_lags = 1;
    Deterministic adf_deterministic = Deterministic::Constant;
    KsMode ks_mode = KsMode::Standardized;
    double alpha = 0.05;  ///< display only; all decision rules are fixed at 5%
};

struct IndexReport {
    std::string label;
    std::size_t n_changes = 0;
    std::size_t gap_months = 0;
    std::optional<AcfResult> acf;
    std::optional<RunsResult> runs;
    std::optional<AdfResult> adf;
    std::optional<NormalityResult> normality;
    std::vector<std::string> notes;  ///< gaps, ties, per-test failures
};

struct EfficiencyReport {
    AnalysisConfig config;
    std::vector<IndexReport> indices;
};

/**
 * Run the whole battery (ACF table, runs test, ADF on the changes, KS and
 * Jarque-Bera) on every series. A series that defeats one test (constant
 * changes, all ties, ...) gets a note instead of aborting the batch.
 */
[[nodiscard]] EfficiencyReport analyze(std::span<const PriceSeries> series,
                                       const AnalysisConfig& config);

enum class ReportFormat { Markdown, Csv, Json };

/**
 * Render deterministically. Markdown mirrors the four-table structure (ACF
 * with SD/SE footer, runs, ADF, normality) at 4 decimals; csv is a long
 * "index,test,metric,value" table; json carries every field at full
 * precision with the key names documented in the README.
 */
[[nodiscard]] std::string render(const EfficiencyReport& report, ReportFormat format);

[[nodiscard]] const char* to_string(ReportFormat format);

}  // namespace randwalk
