#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heavytail/series.hpp"

namespace heavytail {

struct Annotation {
    double x = 0;
    double y = 0;
    std::string text;
    double rotation_deg = 0; // counter-clockwise, like R's srt
};

struct NamedCurve {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
    bool dashed = false;
};

// Everything needed to emit one figure. Rendering is a pure function of
// this structure, so identical specs produce identical bytes.
struct FigureSpec {
    std::vector<PlotSeries> series;
    AxisScale x_scale = AxisScale::Linear;
    AxisScale y_scale = AxisScale::Linear;
    std::vector<NamedCurve> reference_curves;
    std::optional<std::vector<std::pair<double, double>>> shaded_region;
    std::vector<Annotation> annotations;
    std::string title;
    std::string x_label;
    std::string y_label;
    // Explicit axis ranges; derived from the content when absent.
    std::optional<double> x_min, x_max, y_min, y_max;
};

// Renders a standalone SVG document (800x600, 10% margins). Data points
// become one marker element each (circle, class "marker") carrying data-x /
// data-y attributes; line-styled series become polylines; each reference
// curve becomes one path (class "refcurve"). Log axes reject non-positive
// coordinates with an error naming the offending series.
std::string render_figure(const FigureSpec& spec);

} // namespace heavytail
