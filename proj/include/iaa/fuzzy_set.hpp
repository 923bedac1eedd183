#pragma once

#include <optional>
#include <vector>

#include "iaa/interval.hpp"
#include "iaa/step_function.hpp"

namespace iaa {

/// A type-1 fuzzy set. When built by the agreement construction from n
/// source intervals, n_sources records n and every attained membership
/// value is a multiple of 1/n.
struct Type1FuzzySet {
    StepFunction mf;
    std::optional<int> n_sources;
};

/// A general type-2 fuzzy set represented by N nested zSlices. The j-th
/// zSlice (1-based) sits at secondary level z_j = j/N, and
/// Z_j(x) <= Z_{j-1}(x) holds everywhere.
class ZGT2FuzzySet {
public:
    explicit ZGT2FuzzySet(std::vector<Type1FuzzySet> zslices);

    int num_zslices() const { return static_cast<int>(zslices_.size()); }

    /// Secondary membership level of the j-th zSlice, j in [1, N].
    double z_level(int j) const;

    /// The j-th zSlice, j in [1, N]; j = 1 is the widest.
    const Type1FuzzySet& zslice(int j) const;

    const std::vector<Type1FuzzySet>& zslices() const { return zslices_; }

private:
    std::vector<Type1FuzzySet> zslices_;
};

/// Membership at x equals the fraction of intervals containing x; this is
/// the union-of-k-tuple-intersections construction, computed by counting.
Type1FuzzySet build_t1(const std::vector<Interval>& intervals);

/// Builds the zSlice set from one type-1 set per group: the j-th zSlice
/// value at x is the j-th largest group membership at x, which equals the
/// union of intersections over all j-subsets of the group sets.
ZGT2FuzzySet build_zgt2(const std::vector<Type1FuzzySet>& group_sets);

} // namespace iaa
