#pragma once

#include <functional>
#include <vector>

#include "iaa/interval.hpp"

namespace iaa {

/// Breakpoints closer than this are merged during construction, and
/// evaluation snaps an argument onto a breakpoint within the same distance.
/// Survey scales are coarse; anything closer is a numerical sliver.
inline constexpr double kBreakpointTol = 1e-9;

struct Sample {
    double x;
    double membership;
};

/// Exact piecewise-constant membership function on the real line.
///
/// The function is described by strictly increasing breakpoints
/// x_0 < ... < x_m, a value on each open segment (x_k, x_{k+1}), and a
/// value at each breakpoint itself. Outside [x_0, x_m] the function is 0.
/// Isolated point values are first-class: the intersection of [1,4] and
/// [4,6] is the single point {4}, and its membership must survive exactly.
///
/// Instances are always canonical (no removable breakpoint) and immutable,
/// so they can be shared freely across threads.
class StepFunction {
public:
    /// The zero function.
    StepFunction() = default;

    /// Canonicalizing constructor. Breakpoints must be non-decreasing and
    /// are merged when closer than kBreakpointTol; all values must lie in
    /// [0,1]. segment_values.size() must equal breakpoints.size() - 1 and
    /// point_values.size() must equal breakpoints.size().
    StepFunction(std::vector<double> breakpoints,
                 std::vector<double> segment_values,
                 std::vector<double> point_values);

    static StepFunction zero() { return StepFunction(); }

    /// Indicator of a closed interval (membership 1 on it, 0 elsewhere).
    static StepFunction indicator(const Interval& iv);

    /// Constant plateau of the given height over a closed interval.
    static StepFunction plateau(const Interval& iv, double value);

    /// Evaluate at x. Arguments within kBreakpointTol of a breakpoint take
    /// that breakpoint's point value.
    double operator()(double x) const;

    bool is_zero() const { return breakpoints_.empty(); }

    /// Maximum attained value, point values included; 0 for the zero function.
    double max_value() const;

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& segment_values() const { return segment_values_; }
    const std::vector<double>& point_values() const { return point_values_; }

    /// Exact equality of canonical forms.
    friend bool operator==(const StepFunction& a, const StepFunction& b) {
        return a.breakpoints_ == b.breakpoints_ &&
               a.segment_values_ == b.segment_values_ &&
               a.point_values_ == b.point_values_;
    }
    friend bool operator!=(const StepFunction& a, const StepFunction& b) {
        return !(a == b);
    }

    /// Pointwise combination of several step functions. `op` receives the
    /// functions' values at a common point and must map all-zeros to zero
    /// (the result is zero outside every input's breakpoint range).
    friend StepFunction pointwise_combine(
        const std::vector<const StepFunction*>& fs,
        const std::function<double(const std::vector<double>&)>& op);

private:
    // Value on the open segment containing x, assuming x is not a
    // breakpoint; 0 outside [x_0, x_m].
    double segment_value_at(double x) const;

    void canonicalize();

    std::vector<double> breakpoints_;
    std::vector<double> segment_values_; // size m   (between breakpoints)
    std::vector<double> point_values_;   // size m+1 (at breakpoints)
};

StepFunction pointwise_min(const StepFunction& a, const StepFunction& b);
StepFunction pointwise_max(const StepFunction& a, const StepFunction& b);

/// Maximal disjoint closed intervals covering {x : f(x) >= alpha}, sorted.
/// Isolated points appear as degenerate intervals. alpha must be in (0, 1].
std::vector<Interval> alpha_cut(const StepFunction& f, double alpha);

/// Total length of alpha_cut(f, alpha); degenerate points contribute 0.
double alpha_cut_length(const StepFunction& f, double alpha);

/// Lebesgue integral; point values carry no mass.
double integral(const StepFunction& f);

/// Integral of x * f(x); used for centroids.
double first_moment(const StepFunction& f);

/// Evaluate on the grid x_min, x_min + step, ...; the final sample is taken
/// exactly at x_max. step must be positive and x_min < x_max.
std::vector<Sample> sample(const StepFunction& f, double x_min, double x_max,
                           double step);

} // namespace iaa
