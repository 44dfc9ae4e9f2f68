#pragma once

#include <cstdint>
#include <optional>

#include "heavytail/empirical.hpp"
#include "heavytail/sample.hpp"
#include "heavytail/series.hpp"

namespace heavytail {

// Which form of the Pareto boundary to use on the moment-ratio plot. The
// printed form of the curve disagrees with the closed-form Pareto skewness
// by a factor (1 - 2/p); Corrected is the closed form, PaperVerbatim keeps
// the printed one for figure reproduction. They share the (0,2) limit.
enum class FormulaMode { Corrected, PaperVerbatim };

enum class Zone {
    Paretian,
    Gray,
    Lognormal,
    ExponentialThin,
    SubBernoulli,
    Symmetric,
    AbovePareto,
};

struct ZoneResult {
    Zone zone = Zone::Symmetric;
    bool rule_of_thumb_override = false; // Gray promoted to Paretian by skew > 14
    bool thin_tail_precheck = false;     // cv <= 0 or skewness < 0.15
};

// Boundary skewness values at a given CV. pareto only exists for
// cv < 1/sqrt(3), inv_gamma only for cv < 1.
struct BoundaryValues {
    std::optional<double> pareto;
    std::optional<double> inv_gamma;
    double lognormal = 0;
    double gamma = 0;
    double bernoulli = 0;
};

BoundaryValues boundary_curves(double cv, FormulaMode mode);

// Zone walk for an empirical (CV, skewness) point. Boundary ties go to the
// heavier zone, except on the two family-attained curves (lognormal and
// Pareto) which classify as their own family.
ZoneResult classify_moment_point(const MomentPoint& pt, FormulaMode mode);

// Zipf plot series: raw survival points or their log-binned version.
PlotSeries zipf_series(const Sample& s, std::optional<double> bin_base = {});

struct TailFit {
    double slope = 0;
    double r2 = 0;
    bool pass = false;
    std::size_t points = 0;
};

// OLS of log y on log x over the top tail_fraction of the series;
// pass iff slope < 0 and r2 >= r2_min. Needs >= 10 tail points.
TailFit tail_linearity(const PlotSeries& series, double tail_fraction = 0.2,
                       double r2_min = 0.98);

// Mean excess plot series (linear axes).
PlotSeries meplot_series(const Sample& s, std::size_t cut = 5);

struct MeTrend {
    double slope = 0;
    bool pass = false; // slope > 0
};

// OLS trend of e_n(u) against u over threshold deciles 1-9.
MeTrend me_trend(const PlotSeries& series);

enum class ZengaShape { Increasing, Constant, ConvexMin, Other };

struct ZengaShapeConfig {
    double trim_lo = 0.05;
    double trim_hi = 0.95;
    double constant_range = 0.08; // classified constant below this range
    double increasing_slope = 0.1;
    double spearman_min = 0.8;
    double rise_min = 0.05; // per-side rise around an interior minimum,
                            // relative to the curve range
};

// Shape call on a Zenga curve, after trimming to u in [trim_lo, trim_hi].
// Order: increasing, constant, interior minimum, other.
ZengaShape zenga_shape(const ZengaSeries& series, const ZengaShapeConfig& cfg = {});

struct VerdictConfig {
    double tail_fraction = 0.2;
    double r2_min = 0.98;
    std::size_t me_cut = 5;
    ZengaShapeConfig zenga;
    FormulaMode formula_mode = FormulaMode::Corrected;
    double aggregation_delta_max = 0.2;
};

struct AggregationStability {
    double slope_original = 0;
    double slope_aggregated = 0;
    double delta = 0;
    bool applicable = false; // original tail fit must pass first
    bool pass = false;
};

// Compares Zipf tail slopes before and after pairwise aggregation.
// Needs n >= 200.
AggregationStability aggregation_stability(const Sample& s, std::uint64_t seed,
                                           const VerdictConfig& cfg = {});

enum class VerdictLabel { ParetianConsistent, LognormalLike, ThinTailed, Inconclusive };

struct Verdict {
    TailFit zipf_tail;
    MeTrend me;
    MomentPoint point;
    ZoneResult zone;
    ZengaShape zenga = ZengaShape::Other;
    VerdictLabel label = VerdictLabel::Inconclusive;
};

// Combined call over the four plots. A negative Zipf tail fit and a rising
// mean excess are necessary conditions; the moment-ratio zone and the Zenga
// shape must also agree before the sample is called Paretian-consistent.
// Needs n >= 100.
Verdict verdict(const Sample& s, const VerdictConfig& cfg = {});

const char* zone_name(Zone z) noexcept;
const char* zenga_shape_name(ZengaShape s) noexcept;
const char* verdict_label_name(VerdictLabel l) noexcept;
const char* formula_mode_name(FormulaMode m) noexcept;

} // namespace heavytail
