#include "iaa/synthetic.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace iaa {

namespace {

// Uniform deviate in [0, 1) built from the top 53 bits of the raw engine
// output; unlike std::uniform_real_distribution this is pinned by the
// mt19937_64 standardization and therefore reproducible across compilers.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

} // namespace

SurveyDataset generate_synthetic(const SyntheticSpec& spec) {
    if (spec.groups < 1)
        throw validation_error("generate_synthetic: groups must be >= 1");
    if (spec.respondents < 1)
        throw validation_error("generate_synthetic: respondents must be >= 1");
    if (!(spec.theta >= 0.0 && spec.theta <= 1.0))
        throw validation_error("generate_synthetic: theta must be in [0, 1]");

    SurveyDataset dataset;
    dataset.scale = spec.scale;

    // Each group owns a patch of width 2*unit. Respondent intervals stay
    // within center +/- 0.9*unit, so at theta = 0 the groups never overlap
    // and every interval lies inside the scale.
    const double span = spec.scale.length();
    const double unit = span / (2.0 * spec.groups);
    const double mid = spec.scale.lo + span / 2.0;

    // One template per respondent, shared by all groups: at theta = 1 the
    // group centers coincide, so the groups' interval sets are identical.
    std::mt19937_64 rng(spec.seed);
    std::vector<std::pair<double, double>> templates;
    templates.reserve(static_cast<size_t>(spec.respondents));
    for (int r = 0; r < spec.respondents; ++r) {
        const double offset = (next_uniform(rng) * 2.0 - 1.0) * 0.4 * unit;
        const double half = (0.1 + 0.4 * next_uniform(rng)) * unit;
        templates.emplace_back(offset, half);
    }

    for (int g = 0; g < spec.groups; ++g) {
        const double home = spec.scale.lo + (2.0 * g + 1.0) * unit;
        // std::lerp is exact at theta = 1: every center lands on the same
        // double and the groups coincide bit for bit.
        const double center = std::lerp(home, mid, spec.theta);
        const std::string group = "g" + std::to_string(g + 1);
        for (int r = 0; r < spec.respondents; ++r) {
            const auto& [offset, half] = templates[static_cast<size_t>(r)];
            const double m = center + offset;
            dataset.records.push_back(
                {group, "r" + std::to_string(r + 1), spec.term,
                 Interval{m - half, m + half}});
        }
    }
    return dataset;
}

} // namespace iaa
