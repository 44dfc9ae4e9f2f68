#include "heavytail/fit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace heavytail {

LineFit ols_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 2)
        return {};
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0)
        return {};
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r2 = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 0.0;
    return fit;
}

namespace {

std::vector<double> average_ranks(std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
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

} // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() < 2 || x.size() != y.size())
        return 0.0;
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    const auto fit = ols_line(rx, ry);
    // reuse the moments: correlation^2 == r2, sign from the slope
    double r = std::sqrt(std::max(0.0, fit.r2));
    return fit.slope < 0.0 ? -r : r;
}

QuadFit quadratic_fit(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    QuadFit out;
    if (n < 4 || y.size() != n)
        return out;

    double mx = 0.0;
    for (double v : x)
        mx += v;
    mx /= static_cast<double>(n);

    // Normal equations in the centered variable t = x - mx.
    double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    double sy = 0, sty = 0, st2y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = x[i] - mx;
        const double t2 = t * t;
        s1 += t;
        s2 += t2;
        s3 += t2 * t;
        s4 += t2 * t2;
        sy += y[i];
        sty += t * y[i];
        st2y += t2 * y[i];
    }
    double a[3][3] = {{static_cast<double>(n), s1, s2}, {s1, s2, s3}, {s2, s3, s4}};
    double b[3] = {sy, sty, st2y};

    // Gaussian elimination with partial pivoting, keeping the inverse's
    // (2,2) entry for the standard error.
    double inv[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col]))
                pivot = r;
        if (std::abs(a[pivot][col]) < 1e-300)
            return out;
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        std::swap(b[col], b[pivot]);
        const double d = a[col][col];
        for (int c = 0; c < 3; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        b[col] /= d;
        for (int r = 0; r < 3; ++r) {
            if (r == col)
                continue;
            const double f = a[r][col];
            for (int c = 0; c < 3; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
            b[r] -= f * b[col];
        }
    }

    const double cc0 = b[0], cc1 = b[1], cc2 = b[2];
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = x[i] - mx;
        const double resid = y[i] - (cc0 + cc1 * t + cc2 * t * t);
        ssr += resid * resid;
    }
    const double sigma2 = ssr / static_cast<double>(n - 3);

    out.c2 = cc2;
    out.c1 = cc1 - 2.0 * cc2 * mx;
    out.c0 = cc0 - cc1 * mx + cc2 * mx * mx;
    out.se_c2 = std::sqrt(std::max(0.0, sigma2 * inv[2][2]));
    out.ok = true;
    return out;
}

std::pair<std::size_t, std::size_t> decile_band(std::size_t m, int lo, int hi) {
    const auto first = (m * static_cast<std::size_t>(lo)) / 10;
    const auto last = (m * static_cast<std::size_t>(hi) + 9) / 10;
    return {first, std::min(last, m)};
}

} // namespace heavytail
