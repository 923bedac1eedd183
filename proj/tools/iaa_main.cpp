#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iaa/agreement.hpp"
#include "iaa/dataset.hpp"
#include "iaa/fuzzy_set.hpp"
#include "iaa/report.hpp"
#include "iaa/synthetic.hpp"

namespace {

// Exit codes: 0 success, 1 validation failure, 2 I/O failure.
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw iaa::io_error("cannot open output file: " + out_path);
    out << text;
    if (!out)
        throw iaa::io_error("cannot write output file: " + out_path);
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings)
        std::cerr << "warning: " << w << "\n";
}

iaa::Interval scale_from(const std::vector<double>& pair) {
    if (pair.size() != 2 || !(pair[0] < pair[1]))
        throw iaa::validation_error("--scale expects LO HI with LO < HI");
    return iaa::Interval{pair[0], pair[1]};
}

std::string full_precision(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

// "2,5;4,5;3,6" -> three intervals. Whitespace around numbers is accepted.
std::vector<iaa::Interval> parse_interval_list(const std::string& text) {
    std::vector<iaa::Interval> intervals;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t end = std::min(text.find(';', pos), text.size());
        const std::string item = text.substr(pos, end - pos);
        const size_t comma = item.find(',');
        if (comma == std::string::npos)
            throw iaa::validation_error("--intervals: expected LO,HI in '" +
                                        item + "'");
        auto parse = [&](std::string s) {
            const size_t a = s.find_first_not_of(" \t");
            const size_t b = s.find_last_not_of(" \t");
            if (a == std::string::npos)
                throw iaa::validation_error("--intervals: empty endpoint in '" +
                                            item + "'");
            s = s.substr(a, b - a + 1);
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size())
                throw iaa::validation_error(
                    "--intervals: non-numeric endpoint '" + s + "'");
            return v;
        };
        const double lo = parse(item.substr(0, comma));
        const double hi = parse(item.substr(comma + 1));
        if (lo > hi)
            throw iaa::validation_error("--intervals: lo > hi in '" + item +
                                        "'");
        intervals.push_back(iaa::Interval{lo, hi});
        if (end == text.size())
            break;
        pos = end + 1;
    }
    if (intervals.empty())
        throw iaa::validation_error("--intervals: no intervals given");
    return intervals;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval-valued survey agreement analysis"};
    app.require_subcommand(1);

    // report
    auto* report = app.add_subcommand(
        "report", "Compute per-term agreement reports from a survey CSV");
    std::string report_csv;
    std::vector<double> report_scale{0.0, 10.0};
    double discretize_step = 0.0;
    std::string report_format = "json";
    std::string report_out;
    bool report_skip_invalid = false;
    int report_threads = 1;
    report->add_option("csv", report_csv, "Survey CSV file")->required();
    report->add_option("--scale", report_scale, "Response scale LO HI")
        ->expected(2);
    report->add_option("--discretize", discretize_step,
                       "Use sampled membership functions with this grid step");
    report->add_option("--format", report_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    report->add_option("--out", report_out, "Write output to a file");
    report->add_flag("--skip-invalid", report_skip_invalid,
                     "Downgrade invalid rows to warnings");
    report->add_option("--threads", report_threads,
                       "Worker threads for per-term computation")
        ->check(CLI::PositiveNumber);

    // samples
    auto* samples = app.add_subcommand(
        "samples", "Export sampled membership functions for plotting");
    std::string samples_csv;
    std::vector<double> samples_scale{0.0, 10.0};
    double samples_step = 0.0;
    std::string samples_out;
    bool samples_skip_invalid = false;
    samples->add_option("csv", samples_csv, "Survey CSV file")->required();
    samples->add_option("--scale", samples_scale, "Response scale LO HI")
        ->expected(2);
    samples->add_option("--step", samples_step,
                        "Sampling grid step (default: 1% of the scale span)");
    samples->add_option("--out", samples_out, "Write output to a file");
    samples->add_flag("--skip-invalid", samples_skip_invalid,
                      "Downgrade invalid rows to warnings");

    // synth
    auto* synth = app.add_subcommand(
        "synth", "Generate a synthetic survey CSV with tunable group overlap");
    iaa::SyntheticSpec spec;
    std::vector<double> synth_scale{0.0, 10.0};
    std::string synth_out;
    synth->add_option("--groups", spec.groups, "Number of groups");
    synth->add_option("--respondents", spec.respondents,
                      "Respondents per group");
    synth->add_option("--theta", spec.theta,
                      "Group overlap in [0,1]: 0 disjoint, 1 identical");
    synth->add_option("--seed", spec.seed, "Random seed");
    synth->add_option("--scale", synth_scale, "Response scale LO HI")
        ->expected(2);
    synth->add_option("--term", spec.term, "Term label for generated rows");
    synth->add_option("--out", synth_out, "Write output to a file");

    // gamma-t1
    auto* gamma = app.add_subcommand(
        "gamma-t1", "Agreement ratio of an inline interval list");
    std::string gamma_intervals;
    gamma
        ->add_option("--intervals", gamma_intervals,
                     "Semicolon-separated LO,HI pairs, e.g. \"2,5;4,5;3,6\"")
        ->required();

    try {
        app.parse(argc, argv);

        if (*report) {
            iaa::RunConfig config;
            config.scale = scale_from(report_scale);
            if (discretize_step != 0.0) {
                if (!(discretize_step > 0.0))
                    throw iaa::validation_error(
                        "--discretize expects a positive step");
                config.mode = iaa::Mode::discretized;
                config.step = discretize_step;
            }
            config.format = report_format == "csv" ? iaa::OutputFormat::csv
                                                   : iaa::OutputFormat::json;
            config.skip_invalid = report_skip_invalid;
            config.threads = report_threads;
            std::vector<std::string> warnings;
            const iaa::SurveyDataset dataset =
                iaa::ingest_csv(std::filesystem::path(report_csv), config,
                                &warnings);
            print_warnings(warnings);
            write_output(iaa::run_report(dataset, config), report_out);
        } else if (*samples) {
            iaa::RunConfig config;
            config.scale = scale_from(samples_scale);
            if (samples_step != 0.0) {
                if (!(samples_step > 0.0))
                    throw iaa::validation_error("--step expects a positive "
                                                "value");
                config.mode = iaa::Mode::discretized;
                config.step = samples_step;
            }
            config.skip_invalid = samples_skip_invalid;
            std::vector<std::string> warnings;
            const iaa::SurveyDataset dataset =
                iaa::ingest_csv(std::filesystem::path(samples_csv), config,
                                &warnings);
            print_warnings(warnings);
            write_output(iaa::export_samples(dataset, config), samples_out);
        } else if (*synth) {
            spec.scale = scale_from(synth_scale);
            write_output(iaa::write_csv(iaa::generate_synthetic(spec)),
                         synth_out);
        } else if (*gamma) {
            const iaa::Type1FuzzySet set =
                iaa::build_t1(parse_interval_list(gamma_intervals));
            std::cout << full_precision(iaa::gamma_t1(set).gamma) << "\n";
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    } catch (const iaa::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const iaa::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
