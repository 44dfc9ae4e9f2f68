#pragma once

#include <vector>

#include "heavytail/diagnostics.hpp"
#include "heavytail/render.hpp"
#include "heavytail/series.hpp"

namespace heavytail {

// Standard figure layouts for the four plots.

FigureSpec zipf_figure(const PlotSeries& series);
FigureSpec meplot_figure(const PlotSeries& series);

// Moment-ratio figure: the five boundary curves, the shaded Paretian
// region, the sample point and an optional bootstrap cloud. Axes default
// to x in [0,20], y in [-1,40] and expand when the point falls outside.
FigureSpec mrplot_figure(const MomentPoint& pt, FormulaMode mode,
                         const std::vector<MomentPoint>& bootstrap_cloud = {});

FigureSpec zenga_figure(const ZengaSeries& series);

} // namespace heavytail
