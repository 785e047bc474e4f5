#include <cstdint>
#include <fstream>
#include <iostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "randwalk/csv.hpp"
#include "randwalk/errors.hpp"
#include "randwalk/report.hpp"
#include "randwalk/simulator.hpp"

namespace {

using namespace randwalk;

struct AnalyzeArgs {
    std::string input;
    std::string change_mode = "diff";
    std::size_t max_lag = 20;
    std::size_t adf_lags = 1;
    std::string adf_deterministic = "constant";
    std::string ks_mode = "standardized";
    std::string format = "md";
    std::string output = "stdout";
};

struct SimulateArgs {
    std::string model = "random-walk";
    std::size_t length = 118;
    double drift = 0.0;
    double sigma = 1.0;
    double phi = 0.0;
    double start = 100.0;
    std::uint64_t seed = 1;
    std::string start_month = "2005-09";
    std::string label;
    std::string output = "stdout";
};

void write_output(const std::string& path, const std::string& text) {
    if (path == "stdout" || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot open output file '" + path + "'");
    }
    out << text;
    if (!out) {
        throw FormatError("failed while writing '" + path + "'");
    }
}

void run_analyze(const AnalyzeArgs& args) {
    std::vector<PriceSeries> series;
    if (args.input == "-") {
        series = ingest_csv(std::cin);
    } else {
        std::ifstream in(args.input);
        if (!in) {
            throw FormatError("cannot open input file '" + args.input + "'");
        }
        series = ingest_csv(in);
    }

    AnalysisConfig config;
    config.change_mode =
        args.change_mode == "log" ? ChangeMode::LogReturn : ChangeMode::ArithmeticDiff;
    config.max_lag = args.max_lag;
    config.adf_lags = args.adf_lags;
    config.adf_deterministic = args.adf_deterministic == "trend" ? Deterministic::ConstantTrend
                                                                 : Deterministic::Constant;
    config.ks_mode = args.ks_mode == "raw" ? KsMode::RawStandardNormal : KsMode::Standardized;

    const EfficiencyReport report = analyze(series, config);
    ReportFormat format = ReportFormat::Markdown;
    if (args.format == "csv") {
        format = ReportFormat::Csv;
    } else if (args.format == "json") {
        format = ReportFormat::Json;
    }
    write_output(args.output, render(report, format));
}

void run_simulate(const SimulateArgs& args) {
    SimSpec spec;
    if (args.model == "ar1") {
        spec.model = SimModel::Ar1;
    } else if (args.model == "iid") {
        spec.model = SimModel::IidChanges;
    } else {
        spec.model = SimModel::RandomWalk;
    }
    spec.length = args.length;
    spec.drift = args.drift;
    spec.sigma = args.sigma;
    spec.phi = args.phi;
    spec.start_price = args.start;
    spec.seed = args.seed;
    spec.start_month = parse_month(args.start_month);
    spec.label = args.label;

    const SimOutput out = simulate_detailed(spec);
    if (out.redraws > 0) {
        std::cerr << "note: path touched a non-positive price " << out.redraws
                  << " time(s); redrawn with seed " << out.seed_used << '\n';
    }
    std::ostringstream csv;
    write_csv(csv, std::span<const PriceSeries>(&out.series, 1));
    write_output(args.output, std::move(csv).str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random-walk test battery for monthly price series"};
    app.require_subcommand(1);

    AnalyzeArgs aa;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Run the full test battery over a CSV of closes");
    analyze_cmd->add_option("--input", aa.input, "Input CSV path, or - for stdin")->required();
    analyze_cmd->add_option("--change-mode", aa.change_mode, "Change definition")
        ->check(CLI::IsMember({"diff", "log"}))
        ->capture_default_str();
    analyze_cmd->add_option("--max-lag", aa.max_lag, "Highest autocorrelation lag")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000}))
        ->capture_default_str();
    analyze_cmd->add_option("--adf-lags", aa.adf_lags, "Augmentation lags in the ADF regression")
        ->capture_default_str();
    analyze_cmd
        ->add_option("--adf-deterministic", aa.adf_deterministic,
                     "Deterministic terms in the ADF regression")
        ->check(CLI::IsMember({"constant", "trend"}))
        ->capture_default_str();
    analyze_cmd->add_option("--ks-mode", aa.ks_mode, "KS reference distribution")
        ->check(CLI::IsMember({"standardized", "raw"}))
        ->capture_default_str();
    analyze_cmd->add_option("--format", aa.format, "Report format")
        ->check(CLI::IsMember({"md", "csv", "json"}))
        ->capture_default_str();
    analyze_cmd->add_option("--output", aa.output, "Output path, or stdout")
        ->capture_default_str();

    SimulateArgs sa;
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Write a synthetic monthly price series as CSV");
    simulate_cmd->add_option("--model", sa.model, "Price process")
        ->check(CLI::IsMember({"random-walk", "ar1", "iid"}))
        ->capture_default_str();
    simulate_cmd->add_option("--length", sa.length, "Number of monthly observations")
        ->capture_default_str();
    simulate_cmd->add_option("--drift", sa.drift, "Per-month drift of the changes")
        ->capture_default_str();
    simulate_cmd->add_option("--sigma", sa.sigma, "Innovation scale")->capture_default_str();
    simulate_cmd->add_option("--phi", sa.phi, "AR(1) coefficient (ar1 only)")
        ->capture_default_str();
    simulate_cmd->add_option("--start", sa.start, "Starting price")->capture_default_str();
    simulate_cmd->add_option("--seed", sa.seed, "PRNG seed")->capture_default_str();
    simulate_cmd->add_option("--start-month", sa.start_month, "First month as YYYY-MM")
        ->capture_default_str();
    simulate_cmd->add_option("--label", sa.label, "Column label (default: model name)");
    simulate_cmd->add_option("--output", sa.output, "Output path, or stdout")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (analyze_cmd->parsed()) {
            run_analyze(aa);
        } else {
            run_simulate(sa);
        }
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends, exits 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // bad arguments are input errors
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
