#include "heavytail/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace heavytail {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMarginX = 80.0; // 10% of the width per side
constexpr double kMarginY = 60.0; // 10% of the height per side
constexpr double kPlotW = kWidth - 2.0 * kMarginX;
constexpr double kPlotH = kHeight - 2.0 * kMarginY;

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Bounds {
    double lo = 0;
    double hi = 1;
    bool seen = false;

    void add(double v) {
        if (!seen) {
            lo = hi = v;
            seen = true;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
};

class Axis {
public:
    Axis(AxisScale scale, double lo, double hi) : scale_(scale), lo_(lo), hi_(hi) {}

    double to_unit(double v) const {
        const double s = scaled(v);
        return (s - lo_) / (hi_ - lo_);
    }

    double scaled(double v) const {
        return scale_ == AxisScale::Log ? std::log10(v) : v;
    }

    AxisScale scale() const { return scale_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }

    // Tick positions in data coordinates, deterministic.
    std::vector<double> ticks() const {
        std::vector<double> out;
        if (scale_ == AxisScale::Log) {
            const int k0 = static_cast<int>(std::ceil(lo_ - 1e-9));
            const int k1 = static_cast<int>(std::floor(hi_ + 1e-9));
            const int decades = k1 - k0;
            for (int k = k0; k <= k1; ++k)
                out.push_back(std::pow(10.0, k));
            if (decades <= 3) { // add 2x / 5x mantissa ticks on short ranges
                for (int k = k0 - 1; k <= k1; ++k) {
                    for (double m : {2.0, 5.0}) {
                        const double v = m * std::pow(10.0, k);
                        const double s = std::log10(v);
                        if (s >= lo_ - 1e-9 && s <= hi_ + 1e-9)
                            out.push_back(v);
                    }
                }
                std::sort(out.begin(), out.end());
            }
            if (out.empty())
                out.push_back(std::pow(10.0, 0.5 * (lo_ + hi_)));
        } else {
            const double range = hi_ - lo_;
            const double raw = range / 5.0;
            const double mag = std::pow(10.0, std::floor(std::log10(raw)));
            const double norm = raw / mag;
            const double step = mag * (norm < 1.5 ? 1.0 : norm < 3.0 ? 2.0 : norm < 7.0 ? 5.0 : 10.0);
            const auto k0 = static_cast<long long>(std::ceil(lo_ / step - 1e-9));
            const auto k1 = static_cast<long long>(std::floor(hi_ / step + 1e-9));
            for (long long k = k0; k <= k1; ++k)
                out.push_back(static_cast<double>(k) * step);
        }
        return out;
    }

private:
    AxisScale scale_;
    double lo_;
    double hi_;
};

void check_log_positive(AxisScale scale, double v, const std::string& who) {
    if (scale == AxisScale::Log && !(v > 0.0))
        throw std::domain_error("render_figure: non-positive value on log-scale axis in '" +
                                who + "'");
}

} // namespace

std::string render_figure(const FigureSpec& spec) {
    for (const PlotSeries& s : spec.series)
        if (s.size() == 0)
            throw std::invalid_argument("render_figure: series '" + s.label + "' is empty");

    // Gather bounds in scaled coordinates; log axes must see positive data.
    Bounds bx, by;
    auto feed = [&](double x, double y, const std::string& who) {
        check_log_positive(spec.x_scale, x, who);
        check_log_positive(spec.y_scale, y, who);
        bx.add(spec.x_scale == AxisScale::Log ? std::log10(x) : x);
        by.add(spec.y_scale == AxisScale::Log ? std::log10(y) : y);
    };
    for (const PlotSeries& s : spec.series)
        for (std::size_t i = 0; i < s.size(); ++i)
            feed(s.x[i], s.y[i], s.label.empty() ? "series" : s.label);
    for (const NamedCurve& c : spec.reference_curves)
        for (std::size_t i = 0; i < c.x.size(); ++i)
            feed(c.x[i], c.y[i], c.name.empty() ? "curve" : c.name);
    if (spec.shaded_region)
        for (const auto& [x, y] : *spec.shaded_region)
            feed(x, y, "shaded region");

    auto scaled_or = [](AxisScale sc, std::optional<double> v) -> std::optional<double> {
        if (!v)
            return std::nullopt;
        if (sc == AxisScale::Log && !(*v > 0.0))
            throw std::domain_error("render_figure: non-positive explicit range on log axis");
        return sc == AxisScale::Log ? std::log10(*v) : *v;
    };

    double xlo = scaled_or(spec.x_scale, spec.x_min).value_or(bx.seen ? bx.lo : 0.0);
    double xhi = scaled_or(spec.x_scale, spec.x_max).value_or(bx.seen ? bx.hi : 1.0);
    double ylo = scaled_or(spec.y_scale, spec.y_min).value_or(by.seen ? by.lo : 0.0);
    double yhi = scaled_or(spec.y_scale, spec.y_max).value_or(by.seen ? by.hi : 1.0);
    if (xhi <= xlo) {
        xlo -= 0.5;
        xhi += 0.5;
    }
    if (yhi <= ylo) {
        ylo -= 0.5;
        yhi += 0.5;
    }
    // 4% breathing room on auto-derived edges
    if (!spec.x_min && !spec.x_max) {
        const double pad = 0.04 * (xhi - xlo);
        xlo -= pad;
        xhi += pad;
    }
    if (!spec.y_min && !spec.y_max) {
        const double pad = 0.04 * (yhi - ylo);
        ylo -= pad;
        yhi += pad;
    }

    const Axis ax(spec.x_scale, xlo, xhi);
    const Axis ay(spec.y_scale, ylo, yhi);
    auto px = [&](double x) { return kMarginX + ax.to_unit(x) * kPlotW; };
    auto py = [&](double y) { return kHeight - kMarginY - ay.to_unit(y) * kPlotH; };

    static const char* kPalette[] = {"#d62728", "#000000", "#1f77b4", "#2ca02c",
                                     "#9467bd", "#8c564b"};

    std::string svg;
    svg.reserve(1 << 16);
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";
    svg += "<defs><clipPath id=\"plot-area\"><rect x=\"" + fmt("%.2f", kMarginX) +
           "\" y=\"" + fmt("%.2f", kMarginY) + "\" width=\"" + fmt("%.2f", kPlotW) +
           "\" height=\"" + fmt("%.2f", kPlotH) + "\"/></clipPath></defs>\n";

    // axes, ticks, grid
    svg += "<g class=\"axes\" stroke=\"#333333\" fill=\"none\">\n";
    svg += "<rect x=\"" + fmt("%.2f", kMarginX) + "\" y=\"" + fmt("%.2f", kMarginY) +
           "\" width=\"" + fmt("%.2f", kPlotW) + "\" height=\"" + fmt("%.2f", kPlotH) +
           "\"/>\n";
    svg += "</g>\n";

    svg += "<g class=\"ticks\" font-size=\"12\" font-family=\"sans-serif\" fill=\"#333333\">\n";
    for (double t : ax.ticks()) {
        const double x = px(t);
        svg += "<line x1=\"" + fmt("%.2f", x) + "\" y1=\"" + fmt("%.2f", kHeight - kMarginY) +
               "\" x2=\"" + fmt("%.2f", x) + "\" y2=\"" +
               fmt("%.2f", kHeight - kMarginY + 5.0) + "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + fmt("%.2f", x) + "\" y=\"" +
               fmt("%.2f", kHeight - kMarginY + 18.0) +
               "\" text-anchor=\"middle\">" + fmt("%g", t) + "</text>\n";
    }
    for (double t : ay.ticks()) {
        const double y = py(t);
        svg += "<line x1=\"" + fmt("%.2f", kMarginX - 5.0) + "\" y1=\"" + fmt("%.2f", y) +
               "\" x2=\"" + fmt("%.2f", kMarginX) + "\" y2=\"" + fmt("%.2f", y) +
               "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + fmt("%.2f", kMarginX - 8.0) + "\" y=\"" + fmt("%.2f", y + 4.0) +
               "\" text-anchor=\"end\">" + fmt("%g", t) + "</text>\n";
    }
    svg += "</g>\n";

    svg += "<g class=\"data\" clip-path=\"url(#plot-area)\">\n";

    if (spec.shaded_region && spec.shaded_region->size() >= 3) {
        svg += "<polygon class=\"region\" fill=\"#90d890\" fill-opacity=\"0.45\" "
               "stroke=\"none\" points=\"";
        for (const auto& [x, y] : *spec.shaded_region)
            svg += fmt("%.2f", px(x)) + "," + fmt("%.2f", py(y)) + " ";
        svg += "\"/>\n";
    }

    for (const NamedCurve& c : spec.reference_curves) {
        if (c.x.empty())
            continue;
        svg += "<path class=\"refcurve\" id=\"curve-" + xml_escape(c.name) +
               "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.2\"";
        if (c.dashed)
            svg += " stroke-dasharray=\"6,4\"";
        svg += " d=\"";
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            svg += (i == 0 ? "M" : " L");
            svg += fmt("%.2f", px(c.x[i])) + " " + fmt("%.2f", py(c.y[i]));
        }
        svg += "\"/>\n";
    }

    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const PlotSeries& s = spec.series[si];
        const char* color = kPalette[si % (sizeof kPalette / sizeof *kPalette)];
        if (s.style == SeriesStyle::Line) {
            svg += "<polyline class=\"line\" fill=\"none\" stroke=\"";
            svg += color;
            svg += "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < s.size(); ++i)
                svg += fmt("%.2f", px(s.x[i])) + "," + fmt("%.2f", py(s.y[i])) + " ";
            svg += "\"/>\n";
        } else {
            svg += "<g class=\"series\" id=\"series-" + std::to_string(si) + "\">\n";
            for (std::size_t i = 0; i < s.size(); ++i) {
                svg += "<circle class=\"marker\" cx=\"" + fmt("%.2f", px(s.x[i])) +
                       "\" cy=\"" + fmt("%.2f", py(s.y[i])) + "\" r=\"2.5\" fill=\"";
                svg += color;
                svg += "\" data-x=\"" + fmt("%.17g", s.x[i]) + "\" data-y=\"" +
                       fmt("%.17g", s.y[i]) + "\"/>\n";
            }
            svg += "</g>\n";
        }
    }
    svg += "</g>\n";

    for (const Annotation& a : spec.annotations) {
        svg += "<text class=\"annotation\" font-size=\"11\" font-family=\"sans-serif\" "
               "fill=\"#222222\" text-anchor=\"middle\" transform=\"translate(" +
               fmt("%.2f", px(a.x)) + " " + fmt("%.2f", py(a.y)) + ")";
        if (a.rotation_deg != 0.0)
            svg += " rotate(" + fmt("%.2f", -a.rotation_deg) + ")";
        svg += "\">" + xml_escape(a.text) + "</text>\n";
    }

    // legend for labelled series
    {
        double ly = kMarginY + 16.0;
        for (std::size_t si = 0; si < spec.series.size(); ++si) {
            const PlotSeries& s = spec.series[si];
            if (s.label.empty())
                continue;
            const char* color = kPalette[si % (sizeof kPalette / sizeof *kPalette)];
            svg += "<circle cx=\"" + fmt("%.2f", kWidth - kMarginX - 130.0) + "\" cy=\"" +
                   fmt("%.2f", ly - 4.0) + "\" r=\"3\" fill=\"";
            svg += color;
            svg += "\"/>\n<text class=\"legend\" font-size=\"12\" "
                   "font-family=\"sans-serif\" fill=\"#222222\" x=\"" +
                   fmt("%.2f", kWidth - kMarginX - 120.0) + "\" y=\"" + fmt("%.2f", ly) +
                   "\">" + xml_escape(s.label) + "</text>\n";
            ly += 16.0;
        }
    }

    svg += "<text class=\"title\" font-size=\"16\" font-family=\"sans-serif\" "
           "fill=\"#000000\" text-anchor=\"middle\" x=\"400\" y=\"" +
           fmt("%.2f", kMarginY - 20.0) + "\">" + xml_escape(spec.title) + "</text>\n";
    svg += "<text class=\"xlabel\" font-size=\"13\" font-family=\"sans-serif\" "
           "fill=\"#000000\" text-anchor=\"middle\" x=\"400\" y=\"" +
           fmt("%.2f", kHeight - 18.0) + "\">" + xml_escape(spec.x_label) + "</text>\n";
    svg += "<text class=\"ylabel\" font-size=\"13\" font-family=\"sans-serif\" "
           "fill=\"#000000\" text-anchor=\"middle\" transform=\"translate(22 300) "
           "rotate(-90)\">" + xml_escape(spec.y_label) + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace heavytail
