#include "heavytail/figures.hpp"

#include <algorithm>
#include <cmath>

namespace heavytail {

FigureSpec zipf_figure(const PlotSeries& series) {
    FigureSpec fig;
    fig.series.push_back(series);
    fig.x_scale = AxisScale::Log;
    fig.y_scale = AxisScale::Log;
    fig.title = "Zipf Plot";
    fig.x_label = "x on log scale";
    fig.y_label = "1-F(x) on log scale";
    return fig;
}

FigureSpec meplot_figure(const PlotSeries& series) {
    FigureSpec fig;
    fig.series.push_back(series);
    fig.title = "Mean Excess Plot (Meplot)";
    fig.x_label = "Threshold u";
    fig.y_label = "Mean Excess e(u)";
    return fig;
}

namespace {

NamedCurve sampled_curve(const std::string& name, double lo, double hi, int points,
                         bool dashed, double (*f)(double)) {
    NamedCurve c;
    c.name = name;
    c.dashed = dashed;
    c.x.reserve(points);
    c.y.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double cv = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
        c.x.push_back(cv);
        c.y.push_back(f(cv));
    }
    return c;
}

} // namespace

FigureSpec mrplot_figure(const MomentPoint& pt, FormulaMode mode,
                         const std::vector<MomentPoint>& bootstrap_cloud) {
    FigureSpec fig;
    fig.title = "Discriminant Moment-ratio Plot";
    fig.x_label = "CV";
    fig.y_label = "Skewness";
    fig.x_min = 0.0;
    fig.x_max = std::max(20.0, pt.cv * 1.1);
    fig.y_min = std::min(-1.0, pt.skewness * 1.1);
    fig.y_max = std::max(40.0, pt.skewness * 1.1);

    const int kN = 250;
    const double x_hi = *fig.x_max;

    // Pareto curve, swept in the family parameter p > 3.
    NamedCurve pareto;
    pareto.name = "pareto";
    for (int i = 0; i < kN; ++i) {
        const double p = 3.001 + (400.0 - 3.001) * static_cast<double>(i) / (kN - 1);
        const double cv = 1.0 / std::sqrt(p * (p - 2.0));
        const auto b = boundary_curves(cv, mode);
        pareto.x.push_back(cv);
        pareto.y.push_back(*b.pareto);
    }

    NamedCurve inv_gamma;
    inv_gamma.name = "inv_gamma";
    for (int i = 0; i < kN; ++i) {
        const double cv = 0.001 + (0.999 - 0.001) * static_cast<double>(i) / (kN - 1);
        inv_gamma.x.push_back(cv);
        inv_gamma.y.push_back(4.0 * cv / (1.0 - cv * cv));
    }

    // The filled Paretian region: up the inverted-gamma curve, back down the
    // Pareto curve (which runs toward the (0,2) limit point).
    std::vector<std::pair<double, double>> region;
    region.reserve(2 * kN);
    for (std::size_t i = 0; i < inv_gamma.x.size(); ++i)
        region.emplace_back(inv_gamma.x[i], inv_gamma.y[i]);
    for (std::size_t i = 0; i < pareto.x.size(); ++i)
        region.emplace_back(pareto.x[i], pareto.y[i]);
    fig.shaded_region = std::move(region);

    fig.reference_curves.push_back(std::move(pareto));
    fig.reference_curves.push_back(std::move(inv_gamma));
    fig.reference_curves.push_back(sampled_curve(
        "lognormal", 0.01, x_hi, kN, true, +[](double cv) { return cv * cv * cv + 3.0 * cv; }));
    fig.reference_curves.push_back(sampled_curve(
        "gamma", 0.0, x_hi, kN, false, +[](double cv) { return 2.0 * cv; }));
    fig.reference_curves.push_back(sampled_curve(
        "bernoulli", 0.05, x_hi, kN, false, +[](double cv) { return cv - 1.0 / cv; }));

    fig.annotations = {
        {0.35, 20.0, "Pareto I", 90.0},   {1.2, 20.0, "Inverted Gamma", 90.0},
        {2.5, 12.0, "Lognormal", 70.0},   {12.0, 21.0, "Gamma", 23.0},
        {14.0, 11.0, "Bernoulli", 10.0},  {15.0, 1.5, "Normal or Symmetric", 0.0},
    };

    if (!bootstrap_cloud.empty()) {
        PlotSeries cloud;
        cloud.label = "bootstrap";
        for (const MomentPoint& p : bootstrap_cloud) {
            cloud.x.push_back(p.cv);
            cloud.y.push_back(p.skewness);
        }
        fig.series.push_back(std::move(cloud));
    }
    PlotSeries point;
    point.label = "sample";
    point.x.push_back(pt.cv);
    point.y.push_back(pt.skewness);
    fig.series.insert(fig.series.begin(), std::move(point));
    return fig;
}

FigureSpec zenga_figure(const ZengaSeries& series) {
    FigureSpec fig;
    PlotSeries line;
    line.label = "zenga";
    line.style = SeriesStyle::Line;
    line.x = series.u;
    line.y = series.z;
    fig.series.push_back(std::move(line));
    fig.title = "Zenga plot";
    fig.x_label = "u";
    fig.y_label = "Z(u)";
    fig.x_min = 0.0;
    fig.x_max = 1.0;
    fig.y_min = 0.0;
    fig.y_max = 1.0;
    return fig;
}

} // namespace heavytail
