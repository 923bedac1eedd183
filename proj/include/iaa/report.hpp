#pragma once

#include <string>
#include <vector>

#include "iaa/agreement.hpp"
#include "iaa/dataset.hpp"

namespace iaa {

struct GroupReport {
    std::string group;
    int n_intervals = 0;
    AgreementReport t1;
};

struct TermReport {
    std::string term;
    std::vector<GroupReport> groups; // sorted by group name
    AgreementReport intergroup;
    std::vector<std::string> flags;
};

/// Computes per-term reports: a type-1 agreement ratio per group, the
/// inter-group ratio of the zSlice set built from the group sets, and
/// descriptive statistics. Terms are ordered by name; with config.threads
/// above 1 the terms are evaluated concurrently (results do not depend on
/// the thread count). Rejects empty datasets.
std::vector<TermReport> build_reports(const SurveyDataset& dataset,
                                      const RunConfig& config);

/// Serialized report in the configured format. Floats are rendered with
/// four fixed decimals; output is byte-deterministic for equal inputs.
std::string run_report(const SurveyDataset& dataset, const RunConfig& config);

std::string render_report_json(const std::vector<TermReport>& reports,
                               const RunConfig& config);
std::string render_report_csv(const std::vector<TermReport>& reports,
                              const RunConfig& config);

/// Long-format CSV of sampled membership functions: one row per term,
/// series (each group's type-1 set and each zSlice) and grid point within
/// the scale. Grid spacing follows effective_step(config).
std::string export_samples(const SurveyDataset& dataset,
                           const RunConfig& config);

} // namespace iaa
