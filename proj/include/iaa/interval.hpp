#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace iaa {

/// A closed real interval [lo, hi]. Degenerate point intervals (lo == hi)
/// are legal; they model single-point responses and single-point overlaps.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("Interval: endpoints must be finite");
        if (lo > hi)
            throw std::invalid_argument("Interval: lo must not exceed hi");
    }

    double length() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }
};

/// Intersection of two closed intervals; empty result maps to nullopt.
/// Touching endpoints produce a point interval, e.g. [1,4] and [4,6] meet in {4}.
inline std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (lo > hi)
        return std::nullopt;
    return Interval(lo, hi);
}

} // namespace iaa
