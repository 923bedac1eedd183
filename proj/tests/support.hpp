#pragma once

// Shared fixtures and deterministic generators for the test suites. The
// interval rows below are the canonical total/null/moderate agreement cases
// also shipped under data/.

#include <algorithm>
#include <random>
#include <vector>

#include "iaa/interval.hpp"
#include "iaa/step_function.hpp"

namespace support {

using iaa::Interval;

// Total-agreement row (both groups share it); intra-group ratio 1/2.
inline std::vector<Interval> row_total() {
    return {Interval{2, 5}, Interval{4, 5}, Interval{3, 6}};
}

// Null-agreement rows; ratios 5/7 and 1/4.
inline std::vector<Interval> row_null_a() {
    return {Interval{2, 5}, Interval{2.5, 5.5}};
}
inline std::vector<Interval> row_null_b() {
    return {Interval{6, 8}, Interval{7, 10}};
}

// Moderate-agreement rows; ratios 1/2, 4/25 and 2/25.
inline std::vector<Interval> row_moderate_a() {
    return {Interval{2, 5}, Interval{4, 5}, Interval{3, 6}};
}
inline std::vector<Interval> row_moderate_b() {
    return {Interval{1, 4}, Interval{3, 5}, Interval{4, 6}};
}
inline std::vector<Interval> row_moderate_c() {
    return {Interval{2, 4}, Interval{4, 5}, Interval{4, 7}};
}

inline std::vector<std::vector<Interval>> moderate_groups() {
    return {row_moderate_a(), row_moderate_b(), row_moderate_c()};
}

// Four intervals whose membership function is non-convex: two plateaus with
// a gap between 5 and 6.
inline std::vector<Interval> nonconvex4() {
    return {Interval{2, 5}, Interval{3, 5}, Interval{6, 8}, Interval{3, 7}};
}

// Hand-derived membership functions of the fixture rows above, written out
// piece by piece (segment values between breakpoints, point values at
// them). These are frozen expectations, not library output.

// moderate_a = {[2,5],[4,5],[3,6]}: 1/3 on [2,3), 2/3 on [3,4), 1 on [4,5],
// 1/3 on (5,6].
inline iaa::StepFunction mf_moderate_a() {
    return iaa::StepFunction(
        {2, 3, 4, 5, 6}, {1.0 / 3, 2.0 / 3, 1.0, 1.0 / 3},
        {1.0 / 3, 2.0 / 3, 1.0, 1.0, 1.0 / 3});
}

// moderate_b = {[1,4],[3,5],[4,6]}: 1/3 on [1,3), 2/3 on [3,4), 1 at x=4,
// 2/3 on (4,5], 1/3 on (5,6].
inline iaa::StepFunction mf_moderate_b() {
    return iaa::StepFunction(
        {1, 3, 4, 5, 6}, {1.0 / 3, 2.0 / 3, 2.0 / 3, 1.0 / 3},
        {1.0 / 3, 2.0 / 3, 1.0, 2.0 / 3, 1.0 / 3});
}

// moderate_c = {[2,4],[4,5],[4,7]}: 1/3 on [2,4), 1 at x=4, 2/3 on (4,5],
// 1/3 on (5,7].
inline iaa::StepFunction mf_moderate_c() {
    return iaa::StepFunction({2, 4, 5, 7}, {1.0 / 3, 2.0 / 3, 1.0 / 3},
                             {1.0 / 3, 1.0, 2.0 / 3, 1.0 / 3});
}

// nonconvex4: 1/4 on [2,3), 3/4 on [3,5], 1/4 on (5,6), 1/2 on [6,7],
// 1/4 on (7,8].
inline iaa::StepFunction mf_nonconvex4() {
    return iaa::StepFunction({2, 3, 5, 6, 7, 8},
                             {0.25, 0.75, 0.25, 0.5, 0.25},
                             {0.25, 0.75, 0.75, 0.5, 0.5, 0.25});
}

// The three nested slices of the moderate case (widest first):
// slice 1 = pointwise max, slice 2 = middle order statistic,
// slice 3 = pointwise min of the three group sets. Integrals 3, 2, 5/3.
inline iaa::StepFunction mf_moderate_slice1() {
    return iaa::StepFunction(
        {1, 3, 4, 5, 7}, {1.0 / 3, 2.0 / 3, 1.0, 1.0 / 3},
        {1.0 / 3, 2.0 / 3, 1.0, 1.0, 1.0 / 3});
}
inline iaa::StepFunction mf_moderate_slice2() {
    return iaa::StepFunction(
        {2, 3, 4, 5, 6}, {1.0 / 3, 2.0 / 3, 2.0 / 3, 1.0 / 3},
        {1.0 / 3, 2.0 / 3, 1.0, 2.0 / 3, 1.0 / 3});
}
inline iaa::StepFunction mf_moderate_slice3() {
    return iaa::StepFunction({2, 4, 5, 6}, {1.0 / 3, 2.0 / 3, 1.0 / 3},
                             {1.0 / 3, 1.0, 2.0 / 3, 1.0 / 3});
}

// Deterministic RNG for property tests. Values come from the raw engine so
// sequences are identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform integer in [lo, hi]
    int int_in(int lo, int hi) {
        return lo + static_cast<int>(engine_() %
                                     static_cast<std::uint64_t>(hi - lo + 1));
    }

    double real01() {
        return static_cast<double>(engine_() >> 11) *
               (1.0 / 9007199254740992.0);
    }

    // Interval with endpoints on the 0.25 grid inside [0, 10].
    Interval grid_interval() {
        const int a = int_in(0, 40);
        const int b = int_in(0, 40);
        return Interval{0.25 * std::min(a, b), 0.25 * std::max(a, b)};
    }

    std::vector<Interval> grid_intervals(int max_n) {
        std::vector<Interval> out;
        const int n = int_in(1, max_n);
        for (int i = 0; i < n; ++i)
            out.push_back(grid_interval());
        return out;
    }

    std::vector<std::vector<Interval>> grid_groups(int max_groups, int max_n) {
        std::vector<std::vector<Interval>> out;
        const int g = int_in(1, max_groups);
        for (int i = 0; i < g; ++i)
            out.push_back(grid_intervals(max_n));
        return out;
    }

    // Random canonical step function: breakpoints on the 0.25 grid, values
    // quantized to eighths.
    iaa::StepFunction step_function() {
        const int m = int_in(1, 7);
        std::vector<double> bps;
        int pos = int_in(0, 8);
        bps.push_back(0.25 * pos);
        for (int k = 0; k < m; ++k) {
            pos += int_in(1, 4);
            bps.push_back(0.25 * pos);
        }
        auto value = [&] { return int_in(0, 8) / 8.0; };
        std::vector<double> segs;
        std::vector<double> pts;
        for (size_t k = 0; k + 1 < bps.size(); ++k)
            segs.push_back(value());
        for (size_t k = 0; k < bps.size(); ++k)
            pts.push_back(value());
        return iaa::StepFunction(bps, segs, pts);
    }

    // Like step_function(), but every point value dominates its adjacent
    // segment values, the shape produced by counting closed intervals.
    // Raised points become isolated spikes (degenerate cut intervals).
    iaa::StepFunction membership_step_function() {
        const iaa::StepFunction raw = step_function();
        const auto& bps = raw.breakpoints();
        const auto& segs = raw.segment_values();
        std::vector<double> pts(bps.size());
        for (size_t k = 0; k < bps.size(); ++k) {
            const double left = k > 0 ? segs[k - 1] : 0.0;
            const double right = k + 1 < bps.size() ? segs[k] : 0.0;
            pts[k] = std::max(left, right);
            if (int_in(0, 3) == 0)
                pts[k] = std::max(pts[k], int_in(0, 8) / 8.0);
        }
        return iaa::StepFunction(bps, segs, pts);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace support
