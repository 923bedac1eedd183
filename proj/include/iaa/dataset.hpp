#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iaa/interval.hpp"

namespace iaa {

/// Raised for malformed or out-of-contract input; maps to CLI exit code 1.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a file cannot be read or written; maps to CLI exit code 2.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One interval response: who gave it, for which linguistic term.
/// A respondent may contribute several intervals for the same term.
struct SurveyRecord {
    std::string group;
    std::string respondent;
    std::string term;
    Interval interval;

    friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

struct SurveyDataset {
    Interval scale{0.0, 10.0};
    std::vector<SurveyRecord> records;

    friend bool operator==(const SurveyDataset&, const SurveyDataset&) = default;
};

enum class Mode { exact, discretized };
enum class OutputFormat { json, csv };

struct RunConfig {
    Interval scale{0.0, 10.0};
    Mode mode = Mode::exact;
    double step = 0.0; // discretized mode only; must be > 0 there
    OutputFormat format = OutputFormat::json;
    bool skip_invalid = false;
    int threads = 1;
};

/// Grid spacing used for sampled output and discretized measures: the
/// configured step in discretized mode, otherwise 1% of the scale span.
double effective_step(const RunConfig& config);

constexpr std::string_view kCsvHeader = "group,respondent,term,lo,hi";

/// Parses `group,respondent,term,lo,hi` rows. Lines starting with '#' and
/// blank lines are skipped. Each invalid row (wrong field count, non-numeric
/// endpoint, lo > hi, endpoint outside the configured scale, empty name) is
/// reported with its line number; by default all problems are collected into
/// one validation_error, with skip_invalid they become warnings and the row
/// is dropped. A file with no data rows is an error.
SurveyDataset ingest_csv(std::istream& in, const RunConfig& config,
                         std::string_view source_name = "<input>",
                         std::vector<std::string>* warnings = nullptr);

SurveyDataset ingest_csv(const std::filesystem::path& path,
                         const RunConfig& config,
                         std::vector<std::string>* warnings = nullptr);

/// Writes the record table in the ingest format. Endpoints are printed with
/// shortest round-trip formatting, so ingest(write(d)) == d.
std::string write_csv(const SurveyDataset& dataset);

} // namespace iaa
