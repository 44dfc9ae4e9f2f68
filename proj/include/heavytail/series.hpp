#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace heavytail {

enum class AxisScale { Linear, Log };
enum class SeriesStyle { Markers, Line };

// Ordered (x, y) points plus the axis scales they are meant for.
struct PlotSeries {
    std::vector<double> x;
    std::vector<double> y;
    AxisScale x_scale = AxisScale::Linear;
    AxisScale y_scale = AxisScale::Linear;
    SeriesStyle style = SeriesStyle::Markers;
    std::string label;

    std::size_t size() const noexcept { return x.size(); }
};

// One logarithmic bin: (lower, upper] with geometric-mean midpoint and the
// arithmetic mean of the survival ordinates falling inside.
struct Bin {
    double lower = 0;
    double upper = 0;
    double x_bar = 0;
    double y_bar = 0;
    std::size_t count = 0;
};

struct BinnedSeries {
    std::vector<Bin> bins;
};

// Empirical Zenga curve evaluated at the cumulative frequencies of the
// distinct sample values.
struct ZengaSeries {
    std::vector<double> u;
    std::vector<double> z;
    bool endpoint_rescaled = false;

    std::size_t size() const noexcept { return u.size(); }
};

// Empirical (CV, skewness) pair. CV uses the n-1 standard deviation,
// skewness the 1/n third moment over that same sigma.
struct MomentPoint {
    double cv = 0;
    double skewness = 0;
};

} // namespace heavytail
