#pragma once

#include <cstdint>
#include <string>

#include "iaa/dataset.hpp"

namespace iaa {

// Synthetic survey generator for calibration studies. `theta` controls how
// strongly the group opinions overlap: 0 keeps every group on its own
// disjoint patch of the scale, 1 collapses all groups onto the same
// distribution, and values in between interpolate linearly.
struct SyntheticSpec {
    int groups = 3;
    int respondents = 10;
    double theta = 0.5;
    std::uint64_t seed = 1;
    Interval scale{0.0, 10.0};
    std::string term = "synthetic";
};

// Deterministic: equal specs produce byte-identical datasets on every
// platform (the uniform deviate is derived from raw mt19937_64 output, not
// from std::uniform_real_distribution, whose algorithm is
// implementation-defined).
SurveyDataset generate_synthetic(const SyntheticSpec& spec);

} // namespace iaa
