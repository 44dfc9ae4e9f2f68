#include "heavytail/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "heavytail/fit.hpp"

namespace heavytail {

BoundaryValues boundary_curves(double cv, FormulaMode mode) {
    if (!(cv > 0.0) || !std::isfinite(cv))
        throw std::domain_error("boundary_curves: cv must be positive and finite");

    BoundaryValues out;
    out.lognormal = cv * cv * cv + 3.0 * cv; // (omega+2)sqrt(omega-1) with omega = 1+cv^2
    out.gamma = 2.0 * cv;
    out.bernoulli = cv - 1.0 / cv;
    if (cv < 1.0)
        out.inv_gamma = 4.0 * cv / (1.0 - cv * cv);
    if (cv < 1.0 / std::sqrt(3.0)) {
        const double p = 1.0 + std::sqrt(1.0 + 1.0 / (cv * cv));
        const double base = (1.0 + p) / (p - 3.0);
        const double root = std::sqrt(1.0 - 2.0 / p);
        out.pareto = (mode == FormulaMode::Corrected) ? 2.0 * base * root
                                                      : base * 2.0 / root;
    }
    return out;
}

namespace {

// Tolerant "at or below the curve": points within rounding of the two
// family-attained curves must classify as that family.
bool at_most(double value, double curve) {
    return value <= curve + 1e-12 * std::max(1.0, std::abs(curve));
}

} // namespace

ZoneResult classify_moment_point(const MomentPoint& pt, FormulaMode mode) {
    if (!std::isfinite(pt.cv) || !std::isfinite(pt.skewness))
        throw std::domain_error("classify_moment_point: inputs must be finite");

    ZoneResult res;
    res.thin_tail_precheck = (pt.cv <= 0.0 || pt.skewness < 0.15);

    if (std::abs(pt.skewness) < 0.15) {
        res.zone = Zone::Symmetric;
        return res;
    }
    if (pt.cv <= 0.0) {
        // no boundary curve applies; this cannot be a heavy right tail
        res.zone = Zone::SubBernoulli;
        return res;
    }

    const BoundaryValues b = boundary_curves(pt.cv, mode);
    const double skew = pt.skewness;

    if (skew < b.bernoulli) {
        res.zone = Zone::SubBernoulli;
    } else if (skew < b.gamma) {
        res.zone = Zone::ExponentialThin;
    } else if (at_most(skew, b.lognormal)) {
        res.zone = Zone::Lognormal;
    } else if (!b.inv_gamma || skew < *b.inv_gamma) {
        res.zone = Zone::Gray;
    } else if (!b.pareto) {
        res.zone = Zone::Paretian; // region closes upward for cv in [1/sqrt(3), 1)
    } else if (at_most(skew, *b.pareto)) {
        res.zone = Zone::Paretian;
    } else {
        res.zone = Zone::AbovePareto;
    }

    if (res.zone == Zone::Gray && pt.cv < 2.0 && skew > 14.0) {
        res.zone = Zone::Paretian;
        res.rule_of_thumb_override = true;
    }
    return res;
}

PlotSeries zipf_series(const Sample& s, std::optional<double> bin_base) {
    if (!bin_base)
        return survival_points(s);
    const BinnedSeries binned = log_bin(s, *bin_base);
    PlotSeries out;
    out.label = "survival (binned)";
    out.x_scale = AxisScale::Log;
    out.y_scale = AxisScale::Log;
    out.x.reserve(binned.bins.size());
    out.y.reserve(binned.bins.size());
    for (const Bin& b : binned.bins) {
        out.x.push_back(b.x_bar);
        out.y.push_back(b.y_bar);
    }
    return out;
}

TailFit tail_linearity(const PlotSeries& series, double tail_fraction, double r2_min) {
    if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
        throw std::domain_error("tail_linearity: tail_fraction must lie in (0,1]");
    const std::size_t m = series.size();
    const auto k = static_cast<std::size_t>(
        std::ceil(tail_fraction * static_cast<double>(m)));
    if (k < 10)
        throw data_error("tail_linearity: fewer than 10 points in the selected tail");

    std::vector<double> lx(k), ly(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = m - k + i;
        if (!(series.x[j] > 0.0) || !(series.y[j] > 0.0))
            throw data_error("tail_linearity: non-positive coordinate in log-log fit");
        lx[i] = std::log(series.x[j]);
        ly[i] = std::log(series.y[j]);
    }
    const LineFit fit = ols_line(lx, ly);
    TailFit out;
    out.slope = fit.slope;
    out.r2 = fit.r2;
    out.points = k;
    out.pass = fit.slope < 0.0 && fit.r2 >= r2_min;
    return out;
}

PlotSeries meplot_series(const Sample& s, std::size_t cut) {
    return mean_excess_points(s, cut);
}

MeTrend me_trend(const PlotSeries& series) {
    const std::size_t m = series.size();
    const auto [first, last] = decile_band(m, 1, 9);
    if (last - first < 2)
        throw data_error("me_trend: too few thresholds in deciles 1-9");
    const LineFit fit = ols_line(
        std::span<const double>(series.x).subspan(first, last - first),
        std::span<const double>(series.y).subspan(first, last - first));
    return MeTrend{fit.slope, fit.slope > 0.0};
}

ZengaShape zenga_shape(const ZengaSeries& series, const ZengaShapeConfig& cfg) {
    if (series.size() < 10)
        throw data_error("zenga_shape: need at least 10 points");

    std::vector<double> u, z;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series.u[i] >= cfg.trim_lo && series.u[i] <= cfg.trim_hi) {
            u.push_back(series.u[i]);
            z.push_back(series.z[i]);
        }
    }
    if (u.size() < 5)
        throw data_error("zenga_shape: too few points after endpoint trim");

    const auto [zmin_it, zmax_it] = std::minmax_element(z.begin(), z.end());
    const double range = *zmax_it - *zmin_it;

    const LineFit fit = ols_line(u, z);
    const double rho = spearman(u, z);
    if (fit.slope > cfg.increasing_slope && rho > cfg.spearman_min)
        return ZengaShape::Increasing;
    if (range < cfg.constant_range)
        return ZengaShape::Constant;

    const auto min_idx = static_cast<std::size_t>(zmin_it - z.begin());
    if (min_idx > 0 && min_idx + 1 < z.size() && range > 0.0) {
        const double left_max = *std::max_element(z.begin(), z.begin() + min_idx + 1);
        const double right_max = *std::max_element(z.begin() + min_idx, z.end());
        const double left_rise = (left_max - *zmin_it) / range;
        const double right_rise = (right_max - *zmin_it) / range;
        if (left_rise > cfg.rise_min && right_rise > cfg.rise_min)
            return ZengaShape::ConvexMin;
    }
    return ZengaShape::Other;
}

AggregationStability aggregation_stability(const Sample& s, std::uint64_t seed,
                                           const VerdictConfig& cfg) {
    if (s.size() < 200)
        throw data_error("aggregation_stability: need at least 200 observations");

    AggregationStability out;
    const TailFit original = tail_linearity(zipf_series(s), cfg.tail_fraction, cfg.r2_min);
    out.slope_original = original.slope;
    if (!original.pass)
        return out; // not applicable: the raw data already fail the Zipf gate

    const Sample aggregated = pairwise_aggregate(s, seed);
    const TailFit agg = tail_linearity(zipf_series(aggregated), cfg.tail_fraction, cfg.r2_min);
    out.slope_aggregated = agg.slope;
    out.delta = std::abs(original.slope - agg.slope);
    out.applicable = true;
    out.pass = out.delta <= cfg.aggregation_delta_max;
    return out;
}

Verdict verdict(const Sample& s, const VerdictConfig& cfg) {
    if (s.size() < 100)
        throw data_error(
            "verdict: need at least 100 observations for a reliable moment-ratio zone");

    Verdict v;
    v.zipf_tail = tail_linearity(zipf_series(s), cfg.tail_fraction, cfg.r2_min);
    v.me = me_trend(meplot_series(s, cfg.me_cut));
    v.point = moment_stats(s);
    v.zone = classify_moment_point(v.point, cfg.formula_mode);
    v.zenga = zenga_shape(empirical_zenga(s, false), cfg.zenga);

    const bool necessary = v.zipf_tail.pass && v.me.pass;
    if (necessary) {
        v.label = (v.zone.zone == Zone::Paretian && v.zenga == ZengaShape::Increasing)
                      ? VerdictLabel::ParetianConsistent
                      : VerdictLabel::Inconclusive;
    } else if ((v.zone.zone == Zone::Lognormal || v.zone.zone == Zone::Gray) &&
               v.zenga == ZengaShape::Constant) {
        v.label = VerdictLabel::LognormalLike;
    } else if (v.zone.zone == Zone::ExponentialThin || v.zone.zone == Zone::SubBernoulli) {
        v.label = VerdictLabel::ThinTailed;
    } else {
        v.label = VerdictLabel::Inconclusive;
    }
    return v;
}

const char* zone_name(Zone z) noexcept {
    switch (z) {
    case Zone::Paretian: return "Paretian";
    case Zone::Gray: return "Gray";
    case Zone::Lognormal: return "Lognormal";
    case Zone::ExponentialThin: return "ExponentialThin";
    case Zone::SubBernoulli: return "SubBernoulli";
    case Zone::Symmetric: return "Symmetric";
    case Zone::AbovePareto: return "AbovePareto";
    }
    return "?";
}

const char* zenga_shape_name(ZengaShape s) noexcept {
    switch (s) {
    case ZengaShape::Increasing: return "increasing";
    case ZengaShape::Constant: return "constant";
    case ZengaShape::ConvexMin: return "convex_min";
    case ZengaShape::Other: return "other";
    }
    return "?";
}

const char* verdict_label_name(VerdictLabel l) noexcept {
    switch (l) {
    case VerdictLabel::ParetianConsistent: return "ParetianConsistent";
    case VerdictLabel::LognormalLike: return "LognormalLike";
    case VerdictLabel::ThinTailed: return "ThinTailed";
    case VerdictLabel::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* formula_mode_name(FormulaMode m) noexcept {
    return m == FormulaMode::Corrected ? "corrected" : "paper_verbatim";
}

} // namespace heavytail
