#pragma once

#include <cstdint>

#include "heavytail/sample.hpp"
#include "heavytail/series.hpp"

namespace heavytail {

// Empirical survival points: for the i-th order statistic (1-based),
// y_i = 1 - (i - 0.5)/n. Flagged for log-log axes. Needs n >= 2.
PlotSeries survival_points(const Sample& s);

// Logarithmic binning of the survival points. Bin edges form the geometric
// progression min*base^k anchored at the sample minimum; the first bin is
// closed at its lower edge, later bins are (lower, upper]. Empty bins are
// omitted. x_bar is the geometric mean of the bin endpoints, y_bar the
// arithmetic mean of the survival ordinates of the x's in the bin.
BinnedSeries log_bin(const Sample& s, double base);

// Empirical mean excess: for each threshold u = X_{i:n},
// e_n(u) = mean of (X_j - u) over the strict exceedances X_j > u.
// Thresholds with no exceedances are dropped, then the largest `cut`
// remaining thresholds are dropped. Needs n > cut + 1.
PlotSeries mean_excess_points(const Sample& s, std::size_t cut = 5);

// CV = sigma_hat / mean with the (n-1)-denominator standard deviation;
// skewness = (1/n) sum(((x - mean)/sigma_hat)^3). Needs n >= 3 and a
// non-degenerate sample.
MomentPoint moment_stats(const Sample& s);

// Empirical Lorenz curve over the distinct sorted values:
// u_j = N_j/N, L_j = T_j/T.
PlotSeries empirical_lorenz(const Sample& s);

// Empirical Zenga curve Z(u_j) = 1 - Q-(u_j)/Q+(u_j), with
// Q-(u_j) = T_j/N_j and Q+(u_j) = (T-T_j)/(N-N_j) (last point: x_s).
// With rescale_endpoints the first point copies the second and the last
// copies the second-to-last (presentation convention). Needs n >= 3.
ZengaSeries empirical_zenga(const Sample& s, bool rescale_endpoints = false);

// Seeded random pairing: values are permuted, then summed in disjoint
// consecutive pairs; an odd leftover is dropped. Needs n >= 4.
Sample pairwise_aggregate(const Sample& s, std::uint64_t seed);

struct SpacingRatios {
    PlotSeries series;       // (X_{i:n}, X_{i+1:n}/X_{i:n})
    double rank_correlation; // Spearman between the level and the normalized
                             // ratio (n-i) log(X_{i+1:n}/X_{i:n}); near 0 for
                             // Pareto data, where these are independent
};

// Geometric-spacings scatter; needs n >= 3. All-equal ratios give
// rank_correlation 0 by convention.
SpacingRatios spacing_ratios(const Sample& s);

struct BootstrapMoments {
    std::vector<MomentPoint> points;
    std::size_t skipped = 0; // degenerate resamples
};

// B resamples with replacement (resample b uses seed + b), each passed
// through moment_stats. Needs B >= 1 and n >= 3.
BootstrapMoments bootstrap_moments(const Sample& s, std::size_t B, std::uint64_t seed);

namespace detail {
// Consecutive disjoint pair sums without permutation (pairing kernel of
// pairwise_aggregate).
std::vector<double> sum_disjoint_pairs(const std::vector<double>& values);
// Moment computation shared by moment_stats and the bootstrap.
MomentPoint moment_stats_raw(const std::vector<double>& values);
} // namespace detail

} // namespace heavytail
