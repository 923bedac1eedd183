#include <doctest.h>

#include <algorithm>
#include <vector>

#include "iaa/agreement.hpp"
#include "iaa/dataset.hpp"
#include "iaa/report.hpp"
#include "iaa/synthetic.hpp"

using iaa::Interval;
using iaa::RunConfig;
using iaa::SurveyDataset;
using iaa::SyntheticSpec;

namespace {

double intergroup_gamma(const SurveyDataset& d) {
    const auto reports = iaa::build_reports(d, RunConfig{});
    REQUIRE(reports.size() == 1);
    return reports[0].intergroup.gamma;
}

} // namespace

TEST_CASE("generation is deterministic for a fixed seed") {
    SyntheticSpec spec;
    spec.groups = 3;
    spec.respondents = 8;
    spec.theta = 0.4;
    spec.seed = 12345;
    const std::string a = iaa::write_csv(iaa::generate_synthetic(spec));
    const std::string b = iaa::write_csv(iaa::generate_synthetic(spec));
    CHECK(a == b);

    spec.seed = 54321;
    CHECK(iaa::write_csv(iaa::generate_synthetic(spec)) != a);
}

TEST_CASE("full overlap produces identical groups and ratio 1") {
    SyntheticSpec spec;
    spec.groups = 3;
    spec.respondents = 6;
    spec.theta = 1.0;
    spec.seed = 7;
    const SurveyDataset d = iaa::generate_synthetic(spec);
    CHECK(intergroup_gamma(d) == 1.0);

    // every group carries literally the same intervals
    for (int r = 0; r < spec.respondents; ++r) {
        const Interval& first = d.records[static_cast<size_t>(r)].interval;
        for (int g = 1; g < spec.groups; ++g) {
            const auto& other =
                d.records[static_cast<size_t>(g * spec.respondents + r)]
                    .interval;
            REQUIRE(other == first);
        }
    }
}

TEST_CASE("zero overlap produces disjoint groups and ratio 0") {
    SyntheticSpec spec;
    spec.groups = 2;
    spec.respondents = 6;
    spec.theta = 0.0;
    spec.seed = 11;
    const SurveyDataset d = iaa::generate_synthetic(spec);
    CHECK(intergroup_gamma(d) == 0.0);

    // group supports do not touch
    double g1_hi = -1e9;
    double g2_lo = 1e9;
    for (const auto& r : d.records) {
        if (r.group == "g1")
            g1_hi = std::max(g1_hi, r.interval.hi);
        else
            g2_lo = std::min(g2_lo, r.interval.lo);
    }
    CHECK(g1_hi < g2_lo);
}

TEST_CASE("generated intervals respect the scale and naming scheme") {
    SyntheticSpec spec;
    spec.groups = 4;
    spec.respondents = 5;
    spec.theta = 0.3;
    spec.seed = 99;
    const SurveyDataset d = iaa::generate_synthetic(spec);
    REQUIRE(d.records.size() == 20);
    CHECK(d.scale == Interval(0, 10));
    for (const auto& r : d.records) {
        REQUIRE(d.scale.contains(r.interval));
        REQUIRE(r.group.front() == 'g');
        REQUIRE(r.respondent.front() == 'r');
        REQUIRE(r.term == "synthetic");
    }
    CHECK(d.records.front().group == "g1");
    CHECK(d.records.back().group == "g4");
}

TEST_CASE("invalid generator parameters are rejected") {
    SyntheticSpec spec;
    spec.groups = 0;
    CHECK_THROWS_AS(iaa::generate_synthetic(spec), iaa::validation_error);
    spec.groups = 2;
    spec.respondents = 0;
    CHECK_THROWS_AS(iaa::generate_synthetic(spec), iaa::validation_error);
    spec.respondents = 3;
    spec.theta = -0.1;
    CHECK_THROWS_AS(iaa::generate_synthetic(spec), iaa::validation_error);
    spec.theta = 1.1;
    CHECK_THROWS_AS(iaa::generate_synthetic(spec), iaa::validation_error);
}

TEST_CASE("mean agreement grows with the overlap parameter") {
    const std::vector<double> thetas = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> means;
    for (double theta : thetas) {
        double total = 0.0;
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            SyntheticSpec spec;
            spec.groups = 3;
            spec.respondents = 5;
            spec.theta = theta;
            spec.seed = seed;
            total += intergroup_gamma(iaa::generate_synthetic(spec));
        }
        means.push_back(total / 30.0);
    }
    for (size_t i = 1; i < means.size(); ++i)
        CHECK(means[i] >= means[i - 1] - 1e-9);
    CHECK(means.front() == 0.0);
    CHECK(means.back() == 1.0);
}
