#include "iaa/fuzzy_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace iaa {

ZGT2FuzzySet::ZGT2FuzzySet(std::vector<Type1FuzzySet> zslices)
    : zslices_(std::move(zslices)) {
    if (zslices_.empty())
        throw std::invalid_argument("ZGT2FuzzySet: need at least one zSlice");
    // Nesting check: every slice must sit inside its predecessor. Probe at
    // the merged breakpoints and segment midpoints of each adjacent pair.
    for (size_t j = 1; j < zslices_.size(); ++j) {
        const StepFunction& outer = zslices_[j - 1].mf;
        const StepFunction& inner = zslices_[j].mf;
        std::vector<double> probes;
        for (const StepFunction* f : {&outer, &inner})
            probes.insert(probes.end(), f->breakpoints().begin(),
                          f->breakpoints().end());
        std::sort(probes.begin(), probes.end());
        std::vector<double> all(probes);
        for (size_t k = 0; k + 1 < all.size(); ++k)
            probes.push_back(all[k] + 0.5 * (all[k + 1] - all[k]));
        for (double x : probes) {
            if (inner(x) > outer(x) + kBreakpointTol)
                throw std::invalid_argument(
                    "ZGT2FuzzySet: zSlices must be nested");
        }
    }
}

double ZGT2FuzzySet::z_level(int j) const {
    if (j < 1 || j > num_zslices())
        throw std::out_of_range("ZGT2FuzzySet: zSlice index out of range");
    return static_cast<double>(j) / static_cast<double>(num_zslices());
}

const Type1FuzzySet& ZGT2FuzzySet::zslice(int j) const {
    if (j < 1 || j > num_zslices())
        throw std::out_of_range("ZGT2FuzzySet: zSlice index out of range");
    return zslices_[static_cast<size_t>(j - 1)];
}

Type1FuzzySet build_t1(const std::vector<Interval>& intervals) {
    if (intervals.empty())
        throw std::invalid_argument("build_t1: need at least one interval");
    const int n = static_cast<int>(intervals.size());

    std::vector<double> endpoints;
    endpoints.reserve(intervals.size() * 2);
    for (const Interval& iv : intervals) {
        endpoints.push_back(iv.lo);
        endpoints.push_back(iv.hi);
    }
    std::sort(endpoints.begin(), endpoints.end());
    std::vector<double> bps;
    for (double v : endpoints)
        if (bps.empty() || v - bps.back() >= kBreakpointTol)
            bps.push_back(v);

    // Snap interval bounds onto the merged breakpoints so that containment
    // tests below are exact comparisons.
    auto snap = [&bps](double v) {
        auto it = std::lower_bound(bps.begin(), bps.end(), v);
        if (it != bps.end() && *it == v)
            return v;
        return *(it - 1); // v merged into the cluster led by the previous rep
    };
    std::vector<Interval> snapped;
    snapped.reserve(intervals.size());
    for (const Interval& iv : intervals)
        snapped.emplace_back(snap(iv.lo), snap(iv.hi));

    std::vector<double> pts(bps.size(), 0.0);
    std::vector<double> segs(bps.size() - 1, 0.0);
    for (size_t k = 0; k < bps.size(); ++k) {
        int count = 0;
        for (const Interval& iv : snapped)
            if (iv.contains(bps[k]))
                ++count;
        pts[k] = static_cast<double>(count) / n;
    }
    for (size_t k = 0; k + 1 < bps.size(); ++k) {
        int count = 0;
        for (const Interval& iv : snapped)
            if (iv.lo <= bps[k] && bps[k + 1] <= iv.hi)
                ++count;
        segs[k] = static_cast<double>(count) / n;
    }
    return Type1FuzzySet{StepFunction(bps, segs, pts), n};
}

ZGT2FuzzySet build_zgt2(const std::vector<Type1FuzzySet>& group_sets) {
    if (group_sets.empty())
        throw std::invalid_argument("build_zgt2: need at least one group set");
    const int n_groups = static_cast<int>(group_sets.size());

    std::vector<const StepFunction*> mfs;
    mfs.reserve(group_sets.size());
    for (const Type1FuzzySet& g : group_sets)
        mfs.push_back(&g.mf);

    std::vector<Type1FuzzySet> zslices;
    zslices.reserve(group_sets.size());
    for (int j = 1; j <= n_groups; ++j) {
        StepFunction slice = pointwise_combine(
            mfs, [j](const std::vector<double>& values) {
                std::vector<double> sorted(values);
                std::sort(sorted.begin(), sorted.end(), std::greater<>());
                return sorted[static_cast<size_t>(j - 1)];
            });
        zslices.push_back(Type1FuzzySet{std::move(slice), std::nullopt});
    }
    return ZGT2FuzzySet(std::move(zslices));
}

} // namespace iaa
