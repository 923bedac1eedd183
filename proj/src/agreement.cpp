#include "iaa/agreement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace iaa {

namespace {

std::optional<Interval> support_or_none(const StepFunction& f) {
    if (f.is_zero())
        return std::nullopt;
    return Interval(f.breakpoints().front(), f.breakpoints().back());
}

std::optional<double> centroid_or_none(const StepFunction& f) {
    const double mass = integral(f);
    if (mass <= 0.0)
        return std::nullopt;
    return first_moment(f) / mass;
}

void fill_stats(AgreementReport& report, const StepFunction& base) {
    report.support = support_or_none(base);
    report.centroid = centroid_or_none(base);
    report.height = base.max_value();
}

double grid_membership_sum(const StepFunction& f, const Interval& range,
                           double step) {
    double total = 0.0;
    for (const Sample& s : sample(f, range.lo, range.hi, step))
        total += s.membership;
    return total;
}

void check_nested(const StepFunction& inner, const StepFunction& outer) {
    std::vector<double> probes;
    for (const StepFunction* f : {&inner, &outer})
        probes.insert(probes.end(), f->breakpoints().begin(),
                      f->breakpoints().end());
    std::sort(probes.begin(), probes.end());
    const std::vector<double> bps(probes);
    for (size_t k = 0; k + 1 < bps.size(); ++k)
        probes.push_back(bps[k] + 0.5 * (bps[k + 1] - bps[k]));
    for (double x : probes)
        if (inner(x) > outer(x) + kBreakpointTol)
            throw std::invalid_argument(
                "jaccard_nested: inner set is not contained in outer set");
}

// Shared weighted-mean assembly for both agreement ratios. lengths_or_sums
// holds one magnitude per level 1..n; each consecutive ratio is weighted by
// level/n. A ratio over an empty lower level contributes 0: an absent level
// of agreement cannot certify any similarity.
AgreementReport weighted_ratio_report(const std::vector<double>& magnitudes) {
    AgreementReport report;
    const int n = static_cast<int>(magnitudes.size());
    if (n == 1) {
        report.gamma = 1.0;
        report.degenerate = true;
        return report;
    }
    double num = 0.0;
    double den = 0.0;
    for (int level = 2; level <= n; ++level) {
        const double weight = static_cast<double>(level) / n;
        const double lower = magnitudes[static_cast<size_t>(level - 2)];
        const double upper = magnitudes[static_cast<size_t>(level - 1)];
        const double similarity = lower > 0.0 ? upper / lower : 0.0;
        report.per_level.push_back({level, weight, similarity});
        num += weight * similarity;
        den += weight;
    }
    report.gamma = num / den;
    return report;
}

AgreementReport gamma_t1_impl(
    const Type1FuzzySet& x,
    const std::function<double(const StepFunction&, double)>& cut_length) {
    if (!x.n_sources)
        throw std::invalid_argument(
            "gamma_t1: set was not built from a known number of intervals");
    const int n = *x.n_sources;
    if (n < 1)
        throw std::invalid_argument("gamma_t1: source count must be positive");

    std::vector<double> lengths;
    lengths.reserve(static_cast<size_t>(n));
    for (int level = 1; level <= n; ++level)
        lengths.push_back(cut_length(x.mf, static_cast<double>(level) / n));

    AgreementReport report = weighted_ratio_report(lengths);
    fill_stats(report, x.mf);
    return report;
}

AgreementReport gamma_gt2_impl(
    const ZGT2FuzzySet& g,
    const std::function<double(const StepFunction&)>& magnitude) {
    const int n = g.num_zslices();
    std::vector<double> magnitudes;
    magnitudes.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
        magnitudes.push_back(magnitude(g.zslice(j).mf));

    AgreementReport report = weighted_ratio_report(magnitudes);
    fill_stats(report, g.zslice(1).mf);
    for (int j = 1; j <= n; ++j) {
        const StepFunction& mf = g.zslice(j).mf;
        report.zslice_stats.push_back(
            {j, support_or_none(mf), centroid_or_none(mf), mf.max_value()});
    }
    return report;
}

} // namespace

Interval support(const Type1FuzzySet& x) {
    auto s = support_or_none(x.mf);
    if (!s)
        throw std::invalid_argument("support: set is identically zero");
    return *s;
}

double centroid(const Type1FuzzySet& x) {
    auto c = centroid_or_none(x.mf);
    if (!c)
        throw std::invalid_argument("centroid: set has zero mass");
    return *c;
}

double height(const Type1FuzzySet& x) { return x.mf.max_value(); }

AgreementReport gamma_t1(const Type1FuzzySet& x) {
    return gamma_t1_impl(x, [](const StepFunction& f, double alpha) {
        return alpha_cut_length(f, alpha);
    });
}

AgreementReport gamma_t1_discretized(const Type1FuzzySet& x,
                                     const Interval& range, double step) {
    return gamma_t1_impl(x, [&range, step](const StepFunction& f, double alpha) {
        return alpha_cut_length_grid(f, alpha, range, step);
    });
}

double jaccard_nested(const Type1FuzzySet& inner, const Type1FuzzySet& outer) {
    check_nested(inner.mf, outer.mf);
    const double denom = integral(outer.mf);
    if (denom <= 0.0)
        return 0.0;
    return integral(inner.mf) / denom;
}

double jaccard_nested_discretized(const Type1FuzzySet& inner,
                                  const Type1FuzzySet& outer,
                                  const Interval& range, double step) {
    check_nested(inner.mf, outer.mf);
    const double denom = grid_membership_sum(outer.mf, range, step);
    if (denom <= 0.0)
        return 0.0;
    return grid_membership_sum(inner.mf, range, step) / denom;
}

AgreementReport gamma_gt2(const ZGT2FuzzySet& g) {
    return gamma_gt2_impl(
        g, [](const StepFunction& f) { return integral(f); });
}

AgreementReport gamma_gt2_discretized(const ZGT2FuzzySet& g,
                                      const Interval& range, double step) {
    return gamma_gt2_impl(g, [&range, step](const StepFunction& f) {
        return grid_membership_sum(f, range, step);
    });
}

double alpha_cut_length_grid(const StepFunction& f, double alpha,
                             const Interval& range, double step) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument(
            "alpha_cut_length_grid: alpha must lie in (0,1]");
    double total = 0.0;
    bool in_run = false;
    double run_start = 0.0;
    double run_end = 0.0;
    for (const Sample& s : sample(f, range.lo, range.hi, step)) {
        if (s.membership >= alpha) {
            if (!in_run) {
                run_start = s.x;
                in_run = true;
            }
            run_end = s.x;
        } else if (in_run) {
            total += run_end - run_start;
            in_run = false;
        }
    }
    if (in_run)
        total += run_end - run_start;
    return total;
}

} // namespace iaa
