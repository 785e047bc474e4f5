#include "randwalk/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"

#include "randwalk/errors.hpp"

namespace randwalk {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Human formats print at 4 decimals; -0.0000 is normalized and a NaN (a
/// test that partially failed) prints as n/a.
std::string fmt4(double x) {
    if (std::isnan(x)) {
        return "n/a";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    std::string s = buf;
    if (s == "-0.0000") {
        s = "0.0000";
    }
    return s;
}

std::string fmt_count(std::size_t v) { return std::to_string(v); }

/// p-values clamped at the edge of the ADF critical-value table render as a
/// bound, not a number.
std::string fmt_adf_p(const AdfResult& r) {
    switch (r.bound) {
        case TailBound::BelowTable:
            return "< " + fmt4(r.p.value);
        case TailBound::AboveTable:
            return "> " + fmt4(r.p.value);
        case TailBound::Interpolated:
        default:
            return fmt4(r.p.value);
    }
}

void table_header(std::ostream& out, std::span<const std::string> cells) {
    out << '|';
    for (const auto& c : cells) out << ' ' << c << " |";
    out << "\n|";
    for (std::size_t i = 0; i < cells.size(); ++i) out << " --- |";
    out << '\n';
}

void table_row(std::ostream& out, std::span<const std::string> cells) {
    out << '|';
    for (const auto& c : cells) out << ' ' << c << " |";
    out << '\n';
}

void no_data_row(std::ostream& out, std::size_t width) {
    std::vector<std::string> cells(width);
    cells[0] = "(no data)";
    table_row(out, cells);
}

void render_acf_md(std::ostream& out, const EfficiencyReport& report) {
    out << "## Autocorrelation of changes\n\n";
    std::vector<std::string> header{"Lag"};
    std::size_t nlags = 0;
    bool any = false;
    for (const auto& ix : report.indices) {
        header.push_back(ix.label);
        if (ix.acf) {
            any = true;
            nlags = std::max(nlags, ix.acf->rows.size());
        }
    }
    table_header(out, header);
    if (!any) {
        no_data_row(out, header.size());
        out << '\n';
        return;
    }
    std::vector<std::string> cells(header.size());
    for (std::size_t k = 1; k <= nlags; ++k) {
        cells[0] = fmt_count(k);
        for (std::size_t c = 0; c < report.indices.size(); ++c) {
            const auto& acf = report.indices[c].acf;
            cells[c + 1] = (acf && k <= acf->rows.size()) ? fmt4(acf->rows[k - 1].acf) : "";
        }
        table_row(out, cells);
    }
    cells[0] = "Standard Deviation";
    for (std::size_t c = 0; c < report.indices.size(); ++c) {
        const auto& acf = report.indices[c].acf;
        cells[c + 1] = acf ? fmt4(acf->summary_sd) : "";
    }
    table_row(out, cells);
    cells[0] = "Standard Error";
    for (std::size_t c = 0; c < report.indices.size(); ++c) {
        const auto& acf = report.indices[c].acf;
        cells[c + 1] = acf ? fmt4(acf->summary_se) : "";
    }
    table_row(out, cells);
    out << '\n';

    out << "Lags significant at 5% (|t| > 1.96):\n\n";
    for (const auto& ix : report.indices) {
        out << "- " << ix.label << ": ";
        if (!ix.acf) {
            out << "n/a\n";
            continue;
        }
        std::string lags;
        for (const auto& row : ix.acf->rows) {
            if (row.significant_5pct) {
                if (!lags.empty()) lags += ", ";
                lags += fmt_count(row.lag);
            }
        }
        out << (lags.empty() ? "none" : lags) << '\n';
    }
    out << '\n';
}

void render_runs_md(std::ostream& out, const EfficiencyReport& report) {
    out << "## Runs test\n\n";
    const std::vector<std::string> header{"Index", "N", "n_0", "n_1", "nruns", "Z", "p-value"};
    table_header(out, header);
    bool any = false;
    for (const auto& ix : report.indices) {
        if (!ix.runs) continue;
        any = true;
        const auto& r = *ix.runs;
        table_row(out, std::vector<std::string>{ix.label, fmt_count(r.n_total),
                                                fmt_count(r.n_down), fmt_count(r.n_up),
                                                fmt_count(r.nruns), fmt4(r.z),
                                                fmt4(r.p.value)});
    }
    if (!any) no_data_row(out, header.size());
    out << '\n';
}

void render_adf_md(std::ostream& out, const EfficiencyReport& report) {
    out << "## Unit-root (ADF) test on changes\n\n";
    const std::vector<std::string> header{"Index",        "Statistic", "p-value", "Lags",
                                          "Included obs", "CV 1%",     "CV 5%",   "CV 10%"};
    table_header(out, header);
    bool any = false;
    for (const auto& ix : report.indices) {
        if (!ix.adf) continue;
        any = true;
        const auto& r = *ix.adf;
        table_row(out, std::vector<std::string>{
                           ix.label, fmt4(r.statistic), fmt_adf_p(r), fmt_count(r.lags),
                           fmt_count(r.nobs_included), fmt4(r.critical_values.pct1),
                           fmt4(r.critical_values.pct5), fmt4(r.critical_values.pct10)});
    }
    if (!any) no_data_row(out, header.size());
    out << '\n';
}

void render_normality_md(std::ostream& out, const EfficiencyReport& report) {
    out << "## Normality of changes\n\n";
    const std::vector<std::string> header{"Index", "n",    "KS D",     "KS p-value",
                                          "JB",    "JB p-value", "Skewness", "Kurtosis"};
    table_header(out, header);
    bool any = false;
    for (const auto& ix : report.indices) {
        if (!ix.normality) continue;
        any = true;
        const auto& r = *ix.normality;
        table_row(out, std::vector<std::string>{ix.label, fmt_count(r.n), fmt4(r.ks_d),
                                                fmt4(r.ks_p.value), fmt4(r.jb),
                                                fmt4(r.jb_p.value), fmt4(r.skewness),
                                                fmt4(r.kurtosis)});
    }
    if (!any) no_data_row(out, header.size());
    out << '\n';
}

std::string render_markdown(const EfficiencyReport& report) {
    std::ostringstream out;
    out << "# Random-walk test battery\n\n";
    out << "- Change mode: " << to_string(report.config.change_mode) << '\n';
    out << "- Max lag: " << report.config.max_lag << '\n';
    out << "- ADF lags: " << report.config.adf_lags << " ("
        << to_string(report.config.adf_deterministic) << ")\n";
    out << "- KS reference: " << to_string(report.config.ks_mode) << '\n';
    out << "- Significance level: " << fmt4(report.config.alpha) << "\n\n";

    render_acf_md(out, report);
    render_runs_md(out, report);
    render_adf_md(out, report);
    render_normality_md(out, report);

    out << "## Notes\n\n";
    bool any = false;
    for (const auto& ix : report.indices) {
        for (const auto& note : ix.notes) {
            out << "- " << ix.label << ": " << note << '\n';
            any = true;
        }
    }
    if (!any) out << "- none\n";
    return std::move(out).str();
}

void csv_line(std::ostream& out, const std::string& index, const char* test,
              const std::string& metric, const std::string& value) {
    out << index << ',' << test << ',' << metric << ',' << value << '\n';
}

std::string render_csv(const EfficiencyReport& report) {
    std::ostringstream out;
    out << "index,test,metric,value\n";
    for (const auto& ix : report.indices) {
        csv_line(out, ix.label, "series", "n_changes", fmt_count(ix.n_changes));
        csv_line(out, ix.label, "series", "gap_months", fmt_count(ix.gap_months));
        if (ix.acf) {
            for (const auto& row : ix.acf->rows) {
                csv_line(out, ix.label, "acf", "lag_" + fmt_count(row.lag), fmt4(row.acf));
                csv_line(out, ix.label, "acf", "t_lag_" + fmt_count(row.lag), fmt4(row.t));
            }
            csv_line(out, ix.label, "acf", "summary_sd", fmt4(ix.acf->summary_sd));
            csv_line(out, ix.label, "acf", "summary_se", fmt4(ix.acf->summary_se));
        }
        if (ix.runs) {
            const auto& r = *ix.runs;
            csv_line(out, ix.label, "runs", "n", fmt_count(r.n_total));
            csv_line(out, ix.label, "runs", "n_down", fmt_count(r.n_down));
            csv_line(out, ix.label, "runs", "n_up", fmt_count(r.n_up));
            csv_line(out, ix.label, "runs", "nruns", fmt_count(r.nruns));
            csv_line(out, ix.label, "runs", "expected_runs", fmt4(r.expected_runs));
            csv_line(out, ix.label, "runs", "variance", fmt4(r.variance));
            csv_line(out, ix.label, "runs", "z", fmt4(r.z));
            csv_line(out, ix.label, "runs", "p_value", fmt4(r.p.value));
            csv_line(out, ix.label, "runs", "ties_excluded", fmt_count(r.ties_excluded));
        }
        if (ix.adf) {
            const auto& r = *ix.adf;
            csv_line(out, ix.label, "adf", "statistic", fmt4(r.statistic));
            csv_line(out, ix.label, "adf", "p_value", fmt4(r.p.value));
            csv_line(out, ix.label, "adf", "p_bound", to_string(r.bound));
            csv_line(out, ix.label, "adf", "lags", fmt_count(r.lags));
            csv_line(out, ix.label, "adf", "nobs_included", fmt_count(r.nobs_included));
            csv_line(out, ix.label, "adf", "cv_1pct", fmt4(r.critical_values.pct1));
            csv_line(out, ix.label, "adf", "cv_5pct", fmt4(r.critical_values.pct5));
            csv_line(out, ix.label, "adf", "cv_10pct", fmt4(r.critical_values.pct10));
        }
        if (ix.normality) {
            const auto& r = *ix.normality;
            csv_line(out, ix.label, "normality", "ks_d", fmt4(r.ks_d));
            csv_line(out, ix.label, "normality", "ks_p_value", fmt4(r.ks_p.value));
            csv_line(out, ix.label, "normality", "jb", fmt4(r.jb));
            csv_line(out, ix.label, "normality", "jb_p_value", fmt4(r.jb_p.value));
            csv_line(out, ix.label, "normality", "skewness", fmt4(r.skewness));
            csv_line(out, ix.label, "normality", "kurtosis", fmt4(r.kurtosis));
        }
    }
    return std::move(out).str();
}

ordered_json pvalue_json(const PValue& p) {
    return ordered_json{{"value", p.value}, {"sided", to_string(p.sided)}, {"method", p.method}};
}

ordered_json index_json(const IndexReport& ix) {
    ordered_json j;
    j["label"] = ix.label;
    j["n_changes"] = ix.n_changes;
    j["gap_months"] = ix.gap_months;
    if (ix.acf) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : ix.acf->rows) {
            rows.push_back({{"lag", row.lag},
                            {"acf", row.acf},
                            {"se", row.se},
                            {"t", row.t},
                            {"significant_5pct", row.significant_5pct}});
        }
        j["acf"] = {{"n", ix.acf->n},
                    {"rows", std::move(rows)},
                    {"summary_sd", ix.acf->summary_sd},
                    {"summary_se", ix.acf->summary_se}};
    } else {
        j["acf"] = nullptr;
    }
    if (ix.runs) {
        const auto& r = *ix.runs;
        j["runs"] = {{"n_total", r.n_total},
                     {"n_down", r.n_down},
                     {"n_up", r.n_up},
                     {"nruns", r.nruns},
                     {"expected_runs", r.expected_runs},
                     {"variance", r.variance},
                     {"z", r.z},
                     {"p", pvalue_json(r.p)},
                     {"ties_excluded", r.ties_excluded},
                     {"small_sample", r.small_sample}};
    } else {
        j["runs"] = nullptr;
    }
    if (ix.adf) {
        const auto& r = *ix.adf;
        j["adf"] = {{"statistic", r.statistic},
                    {"p", pvalue_json(r.p)},
                    {"p_bound", to_string(r.bound)},
                    {"lags", r.lags},
                    {"nobs_included", r.nobs_included},
                    {"deterministic", to_string(r.deterministic)},
                    {"critical_values",
                     {{"pct1", r.critical_values.pct1},
                      {"pct5", r.critical_values.pct5},
                      {"pct10", r.critical_values.pct10}}}};
    } else {
        j["adf"] = nullptr;
    }
    if (ix.normality) {
        const auto& r = *ix.normality;
        j["normality"] = {{"n", r.n},
                          {"ks_mode", to_string(r.ks_mode)},
                          {"ks_d", r.ks_d},
                          {"ks_p", pvalue_json(r.ks_p)},
                          {"jb", r.jb},
                          {"jb_p", pvalue_json(r.jb_p)},
                          {"skewness", r.skewness},
                          {"kurtosis", r.kurtosis}};
    } else {
        j["normality"] = nullptr;
    }
    j["notes"] = ix.notes;
    return j;
}

std::string render_json(const EfficiencyReport& report) {
    ordered_json j;
    j["config"] = {{"change_mode", to_string(report.config.change_mode)},
                   {"max_lag", report.config.max_lag},
                   {"adf_lags", report.config.adf_lags},
                   {"adf_deterministic", to_string(report.config.adf_deterministic)},
                   {"ks_mode", to_string(report.config.ks_mode)},
                   {"alpha", report.config.alpha}};
    ordered_json indices = ordered_json::array();
    for (const auto& ix : report.indices) indices.push_back(index_json(ix));
    j["indices"] = std::move(indices);
    return j.dump(2) + "\n";
}

}  // namespace

EfficiencyReport analyze(std::span<const PriceSeries> series, const AnalysisConfig& config) {
    if (series.empty()) {
        throw InvalidInputError("analyze: no series given");
    }
    if (config.max_lag < 1) {
        throw InvalidInputError("analyze: max_lag must be >= 1");
    }

    EfficiencyReport report;
    report.config = config;
    report.indices.reserve(series.size());

    for (const auto& s : series) {
        IndexReport ix;
        ix.label = s.label();
        ix.gap_months = s.gap_months();
        if (ix.gap_months > 0) {
            ix.notes.push_back("price history skips " + fmt_count(ix.gap_months) +
                               " calendar month(s); changes span the gaps");
        }

        const ChangeSeries ch = changes(s, config.change_mode);
        ix.n_changes = ch.n();

        // A single degenerate series must not abort the batch: each test
        // either lands in the report or leaves a note saying why not.
        try {
            std::size_t max_lag = config.max_lag;
            if (ch.n() < max_lag + 2) {
                max_lag = ch.n() - 2;  // PriceSeries guarantees n() >= 2
                ix.notes.push_back("autocorrelation: max lag reduced to " + fmt_count(max_lag) +
                                   " for " + fmt_count(ch.n()) + " changes");
            }
            if (max_lag < 1) {
                throw InvalidInputError("fewer than 3 changes");
            }
            ix.acf = acf_table(ch, max_lag);
        } catch (const std::exception& e) {
            ix.notes.push_back(std::string("autocorrelation skipped: ") + e.what());
        }

        try {
            ix.runs = runs_test(ch);
            if (ix.runs->ties_excluded > 0) {
                ix.notes.push_back("runs test excluded " + fmt_count(ix.runs->ties_excluded) +
                                   " change(s) equal to the mean");
            }
            if (ix.runs->small_sample) {
                ix.notes.push_back("runs test: N < 20, normal approximation is unreliable");
            }
        } catch (const std::exception& e) {
            ix.notes.push_back(std::string("runs test skipped: ") + e.what());
        }

        try {
            ix.adf = adf(ch.values, config.adf_lags, config.adf_deterministic);
            ix.adf->label = ix.label;
        } catch (const std::exception& e) {
            ix.notes.push_back(std::string("ADF test skipped: ") + e.what());
        }

        // KS and JB fail independently (different minimum lengths); a NaN
        // marks the half that was skipped.
        NormalityResult nr;
        nr.label = ix.label;
        nr.ks_mode = config.ks_mode;
        nr.n = ch.n();
        bool any_normality = false;
        try {
            const KsOutcome ks = ks_test(ch, config.ks_mode);
            nr.ks_d = ks.d;
            nr.ks_p = ks.p;
            any_normality = true;
        } catch (const std::exception& e) {
            nr.ks_d = kNaN;
            nr.ks_p.value = kNaN;
            ix.notes.push_back(std::string("KS test skipped: ") + e.what());
        }
        try {
            const JbOutcome jb = jarque_bera(ch);
            nr.jb = jb.jb;
            nr.jb_p = jb.p;
            nr.skewness = jb.skewness;
            nr.kurtosis = jb.kurtosis;
            any_normality = true;
        } catch (const std::exception& e) {
            nr.jb = kNaN;
            nr.jb_p.value = kNaN;
            nr.skewness = kNaN;
            nr.kurtosis = kNaN;
            ix.notes.push_back(std::string("Jarque-Bera test skipped: ") + e.what());
        }
        if (any_normality) {
            ix.normality = std::move(nr);
        }

        report.indices.push_back(std::move(ix));
    }
    return report;
}

std::string render(const EfficiencyReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Markdown:
            return render_markdown(report);
        case ReportFormat::Csv:
            return render_csv(report);
        case ReportFormat::Json:
            return render_json(report);
    }
    throw InvalidInputError("render: unknown format");
}

const char* to_string(ReportFormat format) {
    switch (format) {
        case ReportFormat::Csv:
            return "csv";
        case ReportFormat::Json:
            return "json";
        case ReportFormat::Markdown:
        default:
            return "markdown";
    }
}

}  // namespace randwalk
