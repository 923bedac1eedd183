#include "iaa/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace iaa {

namespace {

void check_unit_range(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
        throw std::invalid_argument(std::string(what) +
                                    " must lie in [0,1]");
}

} // namespace

StepFunction::StepFunction(std::vector<double> breakpoints,
                           std::vector<double> segment_values,
                           std::vector<double> point_values) {
    const size_t m1 = breakpoints.size();
    if (segment_values.size() + 1 != m1 && !(m1 == 0 && segment_values.empty()))
        throw std::invalid_argument(
            "StepFunction: need one segment value per breakpoint gap");
    if (point_values.size() != m1)
        throw std::invalid_argument(
            "StepFunction: need one point value per breakpoint");
    for (size_t k = 0; k + 1 < m1; ++k) {
        if (!(breakpoints[k] <= breakpoints[k + 1]))
            throw std::invalid_argument(
                "StepFunction: breakpoints must be non-decreasing");
    }
    for (double b : breakpoints)
        if (!std::isfinite(b))
            throw std::invalid_argument("StepFunction: breakpoints must be finite");
    for (double v : segment_values) check_unit_range(v, "segment value");
    for (double v : point_values) check_unit_range(v, "point value");

    // Merge breakpoints that are closer than the tolerance. The first
    // breakpoint of a merged run survives; its point value is the max of the
    // run's point values and the swallowed segments' values, so no attained
    // membership is lost.
    breakpoints_.reserve(m1);
    segment_values_.reserve(segment_values.size());
    point_values_.reserve(m1);
    for (size_t k = 0; k < m1; ++k) {
        if (!breakpoints_.empty() &&
            breakpoints[k] - breakpoints_.back() < kBreakpointTol) {
            point_values_.back() = std::max(point_values_.back(), point_values[k]);
            if (!segment_values_.empty())
                point_values_.back() =
                    std::max(point_values_.back(), segment_values_.back());
            if (!segment_values_.empty())
                segment_values_.pop_back();
            if (k < segment_values.size())
                segment_values_.push_back(segment_values[k]);
            continue;
        }
        breakpoints_.push_back(breakpoints[k]);
        point_values_.push_back(point_values[k]);
        if (k < segment_values.size())
            segment_values_.push_back(segment_values[k]);
    }
    canonicalize();
}

void StepFunction::canonicalize() {
    // Trim zero edges.
    while (!breakpoints_.empty()) {
        const bool leading_zero =
            point_values_.front() == 0.0 &&
            (segment_values_.empty() || segment_values_.front() == 0.0);
        if (!leading_zero)
            break;
        if (segment_values_.empty()) { // single breakpoint, value 0
            breakpoints_.clear();
            point_values_.clear();
            return;
        }
        breakpoints_.erase(breakpoints_.begin());
        point_values_.erase(point_values_.begin());
        segment_values_.erase(segment_values_.begin());
    }
    while (!breakpoints_.empty() && !segment_values_.empty()) {
        const bool trailing_zero =
            point_values_.back() == 0.0 && segment_values_.back() == 0.0;
        if (!trailing_zero)
            break;
        breakpoints_.pop_back();
        point_values_.pop_back();
        segment_values_.pop_back();
    }
    if (breakpoints_.empty())
        return;

    // Drop interior breakpoints where nothing changes.
    std::vector<double> bps{breakpoints_.front()};
    std::vector<double> segs;
    std::vector<double> pts{point_values_.front()};
    for (size_t k = 1; k + 1 <= segment_values_.size(); ++k) {
        const bool removable = segment_values_[k - 1] == segment_values_[k] &&
                               point_values_[k] == segment_values_[k];
        if (removable)
            continue;
        segs.push_back(segment_values_[k - 1]);
        bps.push_back(breakpoints_[k]);
        pts.push_back(point_values_[k]);
    }
    if (!segment_values_.empty()) {
        segs.push_back(segment_values_.back());
        bps.push_back(breakpoints_.back());
        pts.push_back(point_values_.back());
    }
    breakpoints_ = std::move(bps);
    segment_values_ = std::move(segs);
    point_values_ = std::move(pts);
}

StepFunction StepFunction::indicator(const Interval& iv) {
    return plateau(iv, 1.0);
}

StepFunction StepFunction::plateau(const Interval& iv, double value) {
    check_unit_range(value, "plateau value");
    if (iv.is_point())
        return StepFunction({iv.lo}, {}, {value});
    return StepFunction({iv.lo, iv.hi}, {value}, {value, value});
}

double StepFunction::operator()(double x) const {
    if (breakpoints_.empty())
        return 0.0;
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    // Snap to the nearest breakpoint when within tolerance.
    if (it != breakpoints_.end() && *it - x <= kBreakpointTol)
        return point_values_[static_cast<size_t>(it - breakpoints_.begin())];
    if (it != breakpoints_.begin() && x - *(it - 1) <= kBreakpointTol)
        return point_values_[static_cast<size_t>(it - 1 - breakpoints_.begin())];
    return segment_value_at(x);
}

double StepFunction::segment_value_at(double x) const {
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it == breakpoints_.begin() || it == breakpoints_.end())
        return 0.0;
    return segment_values_[static_cast<size_t>(it - breakpoints_.begin()) - 1];
}

double StepFunction::max_value() const {
    double best = 0.0;
    for (double v : point_values_) best = std::max(best, v);
    for (double v : segment_values_) best = std::max(best, v);
    return best;
}

StepFunction pointwise_combine(
    const std::vector<const StepFunction*>& fs,
    const std::function<double(const std::vector<double>&)>& op) {
    std::vector<double> all;
    for (const StepFunction* f : fs)
        all.insert(all.end(), f->breakpoints().begin(), f->breakpoints().end());
    std::sort(all.begin(), all.end());
    const std::vector<double> bps = [&] {
        std::vector<double> reps;
        for (double v : all)
            if (reps.empty() || v - reps.back() >= kBreakpointTol)
                reps.push_back(v);
        return reps;
    }();
    if (bps.empty())
        return StepFunction::zero();

    std::vector<double> vals(fs.size());
    auto gather_at = [&](double x) {
        for (size_t i = 0; i < fs.size(); ++i) vals[i] = (*fs[i])(x);
        return op(vals);
    };
    auto gather_between = [&](double x) {
        for (size_t i = 0; i < fs.size(); ++i)
            vals[i] = fs[i]->segment_value_at(x);
        return op(vals);
    };

    std::vector<double> pts(bps.size());
    std::vector<double> segs(bps.size() - 1);
    for (size_t k = 0; k < bps.size(); ++k)
        pts[k] = gather_at(bps[k]);
    for (size_t k = 0; k + 1 < bps.size(); ++k)
        segs[k] = gather_between(bps[k] + 0.5 * (bps[k + 1] - bps[k]));
    return StepFunction(bps, segs, pts);
}

StepFunction pointwise_min(const StepFunction& a, const StepFunction& b) {
    return pointwise_combine({&a, &b}, [](const std::vector<double>& v) {
        return std::min(v[0], v[1]);
    });
}

StepFunction pointwise_max(const StepFunction& a, const StepFunction& b) {
    return pointwise_combine({&a, &b}, [](const std::vector<double>& v) {
        return std::max(v[0], v[1]);
    });
}

std::vector<Interval> alpha_cut(const StepFunction& f, double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) // also rejects NaN
        throw std::invalid_argument("alpha_cut: alpha must lie in (0,1]");
    const auto& bps = f.breakpoints();
    const auto& segs = f.segment_values();
    const auto& pts = f.point_values();

    // Collect covered pieces as closed intervals in order, then merge
    // touching ones; a covered open segment contributes its closure.
    std::vector<Interval> out;
    auto add = [&out](double lo, double hi) {
        if (!out.empty() && lo <= out.back().hi)
            out.back().hi = std::max(out.back().hi, hi);
        else
            out.emplace_back(lo, hi);
    };
    for (size_t k = 0; k < bps.size(); ++k) {
        if (pts[k] >= alpha)
            add(bps[k], bps[k]);
        if (k < segs.size() && segs[k] >= alpha)
            add(bps[k], bps[k + 1]);
    }
    return out;
}

double alpha_cut_length(const StepFunction& f, double alpha) {
    double total = 0.0;
    for (const Interval& iv : alpha_cut(f, alpha))
        total += iv.length();
    return total;
}

double integral(const StepFunction& f) {
    const auto& bps = f.breakpoints();
    const auto& segs = f.segment_values();
    double total = 0.0;
    for (size_t k = 0; k < segs.size(); ++k)
        total += segs[k] * (bps[k + 1] - bps[k]);
    return total;
}

double first_moment(const StepFunction& f) {
    const auto& bps = f.breakpoints();
    const auto& segs = f.segment_values();
    double total = 0.0;
    for (size_t k = 0; k < segs.size(); ++k)
        total += segs[k] * 0.5 * (bps[k + 1] * bps[k + 1] - bps[k] * bps[k]);
    return total;
}

std::vector<Sample> sample(const StepFunction& f, double x_min, double x_max,
                           double step) {
    if (!(step > 0.0))
        throw std::invalid_argument("sample: step must be positive");
    if (!(x_min < x_max))
        throw std::invalid_argument("sample: x_min must be below x_max");
    std::vector<Sample> out;
    const double last = x_max - step * 1e-9;
    for (size_t k = 0;; ++k) {
        const double x = x_min + static_cast<double>(k) * step;
        if (!(x < last))
            break;
        out.push_back({x, f(x)});
    }
    out.push_back({x_max, f(x_max)});
    return out;
}

} // namespace iaa
