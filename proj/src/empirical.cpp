#include "heavytail/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heavytail/rng.hpp"

namespace heavytail {

PlotSeries survival_points(const Sample& s) {
    const std::size_t n = s.size();
    if (n < 2)
        throw data_error("survival_points: need at least 2 observations");
    PlotSeries out;
    out.x = s.values();
    out.y.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.y[i] = 1.0 - (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    out.x_scale = AxisScale::Log;
    out.y_scale = AxisScale::Log;
    out.label = "survival";
    return out;
}

BinnedSeries log_bin(const Sample& s, double base) {
    if (!(base > 1.0))
        throw std::domain_error("log_bin: base must be > 1");
    const auto& v = s.values();
    const std::size_t n = v.size();
    const auto y = survival_points(s).y; // needs n >= 2 anyway

    BinnedSeries out;
    double lower = s.min();
    double upper = lower * base;
    std::size_t i = 0;
    // Each value goes to the first bin whose upper edge reaches it, so the
    // minimum lands in bin 1 and interior edges belong to the bin below.
    while (i < n) {
        Bin bin{lower, upper, std::sqrt(lower * upper), 0.0, 0};
        double ysum = 0.0;
        while (i < n && v[i] <= upper) {
            ysum += y[i];
            ++bin.count;
            ++i;
        }
        if (bin.count > 0) {
            bin.y_bar = ysum / static_cast<double>(bin.count);
            out.bins.push_back(bin);
        }
        lower = upper;
        upper *= base;
    }
    return out;
}

PlotSeries mean_excess_points(const Sample& s, std::size_t cut) {
    const auto& v = s.values();
    const std::size_t n = v.size();
    if (n <= cut + 1)
        throw data_error("mean_excess_points: sample too small for the requested cut");

    // top_sum[k] = sum of the k largest values, accumulated from the top.
    std::vector<double> top_sum(n + 1, 0.0);
    for (std::size_t k = 1; k <= n; ++k)
        top_sum[k] = top_sum[k - 1] + v[n - k];

    PlotSeries out;
    out.label = "mean excess";
    for (std::size_t i = 0; i < n; ++i) {
        const double u = v[i];
        const auto ub = std::upper_bound(v.begin(), v.end(), u) - v.begin();
        const std::size_t k = n - static_cast<std::size_t>(ub); // strict exceedances
        if (k == 0)
            continue;
        out.x.push_back(u);
        out.y.push_back(top_sum[k] / static_cast<double>(k) - u);
    }
    if (out.size() <= cut)
        throw data_error("mean_excess_points: no thresholds left after cut");
    out.x.resize(out.size() - cut);
    out.y.resize(out.x.size());
    return out;
}

namespace detail {

MomentPoint moment_stats_raw(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 3)
        throw data_error("moment_stats: need at least 3 observations");
    double mean = 0.0;
    for (double x : values)
        mean += x;
    mean /= static_cast<double>(n);

    double m2 = 0.0;
    for (double x : values) {
        const double d = x - mean;
        m2 += d * d;
    }
    const double sd = std::sqrt(m2 / static_cast<double>(n - 1));
    if (!(sd > 0.0))
        throw data_error("moment_stats: zero variance (degenerate sample)");

    double skew = 0.0;
    for (double x : values) {
        const double z = (x - mean) / sd;
        skew += z * z * z;
    }
    skew /= static_cast<double>(n);
    return MomentPoint{sd / mean, skew};
}

std::vector<double> sum_disjoint_pairs(const std::vector<double>& values) {
    std::vector<double> out;
    out.reserve(values.size() / 2);
    for (std::size_t i = 0; i + 1 < values.size(); i += 2)
        out.push_back(values[i] + values[i + 1]);
    return out;
}

} // namespace detail

MomentPoint moment_stats(const Sample& s) {
    return detail::moment_stats_raw(s.values());
}

namespace {

// Cumulative counts and totals over the distinct sorted values.
struct Grouped {
    std::vector<double> value;  // x_j
    std::vector<double> cum_n;  // N_j
    std::vector<double> cum_t;  // T_j
};

Grouped group_distinct(const Sample& s) {
    Grouped g;
    const auto& v = s.values();
    double count = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        count += 1.0;
        total += v[i];
        if (i + 1 == v.size() || v[i + 1] != v[i]) {
            g.value.push_back(v[i]);
            g.cum_n.push_back(count);
            g.cum_t.push_back(total);
        }
    }
    return g;
}

} // namespace

PlotSeries empirical_lorenz(const Sample& s) {
    if (s.size() < 2)
        throw data_error("empirical_lorenz: need at least 2 observations");
    const Grouped g = group_distinct(s);
    const double n = static_cast<double>(s.size());
    const double total = g.cum_t.back();

    PlotSeries out;
    out.label = "lorenz";
    out.x.reserve(g.value.size());
    out.y.reserve(g.value.size());
    for (std::size_t j = 0; j < g.value.size(); ++j) {
        out.x.push_back(g.cum_n[j] / n);
        out.y.push_back(g.cum_t[j] / total);
    }
    return out;
}

ZengaSeries empirical_zenga(const Sample& s, bool rescale_endpoints) {
    if (s.size() < 3)
        throw data_error("empirical_zenga: need at least 3 observations");
    const Grouped g = group_distinct(s);
    const double n = static_cast<double>(s.size());
    const double total = g.cum_t.back();
    const std::size_t m = g.value.size();

    ZengaSeries out;
    out.u.reserve(m);
    out.z.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double q_lower = g.cum_t[j] / g.cum_n[j];
        const double q_upper = (j + 1 == m)
                                   ? g.value.back()
                                   : (total - g.cum_t[j]) / (n - g.cum_n[j]);
        out.u.push_back(g.cum_n[j] / n);
        out.z.push_back(1.0 - q_lower / q_upper);
    }
    if (rescale_endpoints && m >= 2) {
        out.z.front() = out.z[1];
        out.z.back() = out.z[m - 2];
        out.endpoint_rescaled = true;
    }
    return out;
}

Sample pairwise_aggregate(const Sample& s, std::uint64_t seed) {
    if (s.size() < 4)
        throw data_error("pairwise_aggregate: need at least 4 observations");
    std::vector<double> shuffled = s.values();
    SplitMix64 rng(seed);
    for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(rng.next_below(i + 1));
        std::swap(shuffled[i], shuffled[j]);
    }
    return Sample::from_sorted(detail::sum_disjoint_pairs(shuffled));
}

namespace {

// Average ranks with ties; input need not be sorted.
std::vector<double> ranks_of(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && x[idx[j + 1]] == x[idx[i]])
            ++j;
        const double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            rank[idx[k]] = avg;
        i = j + 1;
    }
    return rank;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0)
        return 0.0; // constant input: correlation 0 by convention
    return sxy / std::sqrt(sxx * syy);
}

} // namespace

SpacingRatios spacing_ratios(const Sample& s) {
    const auto& v = s.values();
    const std::size_t n = v.size();
    if (n < 3)
        throw data_error("spacing_ratios: need at least 3 observations");
    PlotSeries series;
    series.label = "spacing ratios";
    series.x.reserve(n - 1);
    series.y.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        series.x.push_back(v[i]);
        series.y.push_back(v[i + 1] / v[i]);
    }

    // Raw consecutive ratios shrink toward 1 as more observations remain
    // above them, so their pooled rank correlation with the level is
    // positive even for exact Pareto data. The scalar therefore uses the
    // Renyi-normalized ratios (n-i) * log(X_{i+1:n}/X_{i:n}), which are
    // iid exponential and independent of the level under a Pareto law.
    bool all_equal = true;
    for (double r : series.y)
        if (r != series.y.front())
            all_equal = false;
    double rho = 0.0; // constant ratios: correlation 0 by convention
    if (!all_equal) {
        std::vector<double> normalized(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            normalized[i] =
                static_cast<double>(n - 1 - i) * std::log(series.y[i]);
        rho = pearson(ranks_of(series.x), ranks_of(normalized));
    }
    return SpacingRatios{std::move(series), rho};
}

BootstrapMoments bootstrap_moments(const Sample& s, std::size_t B, std::uint64_t seed) {
    if (B < 1)
        throw std::invalid_argument("bootstrap_moments: B must be >= 1");
    const auto& v = s.values();
    if (v.size() < 3)
        throw data_error("bootstrap_moments: need at least 3 observations");

    BootstrapMoments out;
    out.points.reserve(B);
    std::vector<double> resample(v.size());
    for (std::size_t b = 0; b < B; ++b) {
        SplitMix64 rng(seed + b);
        for (auto& slot : resample)
            slot = v[static_cast<std::size_t>(rng.next_below(v.size()))];
        try {
            out.points.push_back(detail::moment_stats_raw(resample));
        } catch (const data_error&) {
            ++out.skipped;
        }
    }
    return out;
}

} // namespace heavytail
