#pragma once

#include <optional>
#include <vector>

#include "iaa/fuzzy_set.hpp"
#include "iaa/interval.hpp"
#include "iaa/step_function.hpp"

namespace iaa {

/// One term of an agreement ratio: agreement level, its weight, and the
/// similarity between that level and the one below it.
struct LevelSimilarity {
    int level;
    double weight;
    double similarity;
};

/// Per-zSlice descriptive statistics. support and centroid are absent for
/// slices with empty support or zero mass.
struct ZSliceStats {
    int level;
    std::optional<Interval> support;
    std::optional<double> centroid;
    double height;
};

/// Result of an agreement-ratio computation plus descriptive statistics of
/// the underlying set (for zSlice sets: of the base slice). gamma always
/// equals sum(weight * similarity) / sum(weight) over per_level; degenerate
/// marks the single-source convention gamma = 1.
struct AgreementReport {
    double gamma = 0.0;
    std::vector<LevelSimilarity> per_level;
    std::optional<Interval> support;
    std::optional<double> centroid;
    double height = 0.0;
    bool degenerate = false;
    std::vector<ZSliceStats> zslice_stats; // filled for zSlice sets only
};

/// Smallest closed interval containing {x : mf(x) > 0}. Rejects the zero set.
Interval support(const Type1FuzzySet& x);

/// Membership-weighted mean abscissa. Rejects sets with zero integral.
double centroid(const Type1FuzzySet& x);

/// Maximum attained membership, point values included.
double height(const Type1FuzzySet& x);

/// Agreement ratio of a set built from n intervals: the weighted mean of
/// consecutive alpha-cut length ratios |X_a| / |X_{a-1}| at levels a/n,
/// weights a/n. Ratios with empty lower cut contribute 0. n = 1 yields 1 by
/// convention. Rejects sets without a recorded source count.
AgreementReport gamma_t1(const Type1FuzzySet& x);

/// Same ratio with cut lengths measured on a grid over `range` with spacing
/// `step` (run detection over discrete samples).
AgreementReport gamma_t1_discretized(const Type1FuzzySet& x,
                                     const Interval& range, double step);

/// Jaccard similarity of a nested pair, simplified to |inner| / |outer|.
/// Rejects pairs where inner exceeds outer beyond tolerance; returns 0 when
/// outer has zero mass.
double jaccard_nested(const Type1FuzzySet& inner, const Type1FuzzySet& outer);

/// Nested Jaccard from membership sums over a sample grid.
double jaccard_nested_discretized(const Type1FuzzySet& inner,
                                  const Type1FuzzySet& outer,
                                  const Interval& range, double step);

/// Inter-group agreement ratio of a zSlice set: weighted mean of the nested
/// Jaccard similarities of consecutive zSlices, weights z_j = j/N.
/// N = 1 yields 1 by convention. Statistics are taken on the base zSlice;
/// per-slice statistics are reported as well.
AgreementReport gamma_gt2(const ZGT2FuzzySet& g);

/// Discretized-path variant of gamma_gt2 (grid membership sums).
AgreementReport gamma_gt2_discretized(const ZGT2FuzzySet& g,
                                      const Interval& range, double step);

/// Length of {x : f(x) >= alpha} detected by walking a sample grid, the
/// discrete counterpart of alpha_cut_length. Single-sample runs have zero
/// length.
double alpha_cut_length_grid(const StepFunction& f, double alpha,
                             const Interval& range, double step);

} // namespace iaa
