#pragma once

#include <cstddef>
#include <span>
#include <utility>

namespace heavytail {

struct LineFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
};

// Ordinary least squares of y on x. Degenerate inputs (constant x or y)
// yield slope 0 / r2 0.
LineFit ols_line(std::span<const double> x, std::span<const double> y);

// Spearman rank correlation with average ranks for ties; 0 when either
// side is constant.
double spearman(std::span<const double> x, std::span<const double> y);

struct QuadFit {
    double c0 = 0, c1 = 0, c2 = 0; // y ~ c0 + c1 x + c2 x^2
    double se_c2 = 0;              // standard error of the quadratic term
    bool ok = false;
};

// Least-squares quadratic (x is centered internally for conditioning; c2
// and its standard error are shift-invariant). Needs at least 4 points.
QuadFit quadratic_fit(std::span<const double> x, std::span<const double> y);

// Index range [first, last) selecting threshold deciles lo..hi out of m
// points: first = floor(m*lo/10), last = ceil(m*hi/10).
std::pair<std::size_t, std::size_t> decile_band(std::size_t m, int lo, int hi);

} // namespace heavytail
