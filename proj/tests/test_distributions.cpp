#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "heavytail/model.hpp"
#include "heavytail/special.hpp"

using namespace heavytail;

namespace {

// Quadrature oracle for the Lorenz curve: L(u) = (1/mu) int_0^u Q(s) ds,
// composite Simpson on [eps, u]. Independent of the closed forms under test.
double lorenz_by_quadrature(const Model& m, double u) {
    const double eps = 1e-9;
    const int n = 20000; // even
    const double h = (u - eps) / n;
    double sum = quantile(m, eps) + quantile(m, u);
    for (int i = 1; i < n; ++i)
        sum += quantile(m, eps + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0 / mean(m);
}

const std::vector<Model> kFiniteMeanModels = {
    Model(ParetoI{1.0, 2.0}),   Model(ParetoI{3.0, 1.4}),  Model(ParetoII{2.0, 3.0}),
    Model(Gpd{0.5, 1.0, 0.0}),  Model(Gpd{0.0, 2.0, 1.0}), Model(Gpd{-0.5, 1.0, 0.0}),
    Model(Lognormal{0.0, 1.0}), Model(Exponential{2.0}),   Model(GammaDist{2.5, 1.5}),
};

} // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Model(ParetoI{0.0, 2.0}), std::domain_error);
    CHECK_THROWS_AS(Model(ParetoI{1.0, -2.0}), std::domain_error);
    CHECK_THROWS_AS(Model(ParetoII{-1.0, 2.0}), std::domain_error);
    CHECK_THROWS_AS(Model(Gpd{0.5, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(Model(Lognormal{0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(Model(Exponential{0.0}), std::domain_error);
    CHECK_THROWS_AS(Model(GammaDist{1.0, -1.0}), std::domain_error);
    CHECK(Model(ParetoI{1.0, 2.5}).name() == "pareto1(x0=1, alpha=2.5)");
}

TEST_CASE("survival closed forms") {
    CHECK(survival(Model(ParetoI{1.0, 2.0}), 1.0) == 1.0);
    CHECK(survival(Model(ParetoI{1.0, 2.0}), 2.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(survival(Model(Gpd{0.0, 1.0, 0.0}), 1.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(survival(Model(ParetoI{1.0, 2.0}), 0.5) == 1.0); // below support
    CHECK(survival(Model(Gpd{-0.5, 1.0, 0.0}), 3.0) == 0.0); // past upper endpoint
    CHECK(survival(Model(Lognormal{0.0, 1.0}), 2.0) ==
          doctest::Approx(0.2441086).epsilon(1e-6));
}

TEST_CASE("survival is non-increasing with values in [0,1]") {
    for (const Model& m : kFiniteMeanModels) {
        double prev = 1.1;
        for (int i = 0; i <= 400; ++i) {
            const double x = -1.0 + i * 0.05;
            const double s = survival(m, x);
            REQUIRE(s >= 0.0);
            REQUIRE(s <= 1.0);
            REQUIRE(s <= prev + 1e-15);
            prev = s;
        }
    }
}

TEST_CASE("quantile closed forms and round trip") {
    CHECK(quantile(Model(ParetoI{1.0, 2.0}), 0.75) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(quantile(Model(Exponential{1.0}), 1.0 - std::exp(-1.0)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(quantile(Model(Lognormal{0.0, 1.0}), 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)quantile(Model(Exponential{1.0}), 0.0), std::domain_error);
    CHECK_THROWS_AS((void)quantile(Model(Exponential{1.0}), 1.0), std::domain_error);

    for (const Model& m : kFiniteMeanModels) {
        double prev = -1e308;
        for (int i = 1; i <= 999; ++i) {
            const double u = i / 1000.0;
            const double q = quantile(m, u);
            REQUIRE(q >= prev);
            REQUIRE(std::fabs(1.0 - u - survival(m, q)) < 1e-12);
            prev = q;
        }
    }
}

TEST_CASE("pareto2 is a shifted pareto1") {
    const Model p2(ParetoII{2.0, 3.0});
    const Model p1(ParetoI{2.0, 3.0});
    for (double x = 2.0; x < 60.0; x += 0.37)
        REQUIRE(survival(p2, x - 2.0) == doctest::Approx(survival(p1, x)).epsilon(1e-14));
}

TEST_CASE("gpd with xi>0 and nu=beta/xi matches pareto1") {
    const Model g(Gpd{0.5, 1.0, 2.0}); // alpha = 1/xi = 2, x0 = beta/xi = 2
    const Model p(ParetoI{2.0, 2.0});
    for (double x = 2.0; x < 100.0; x += 0.53)
        REQUIRE(survival(g, x) == doctest::Approx(survival(p, x)).epsilon(1e-14));
}

TEST_CASE("theoretical mean excess") {
    CHECK(mean_excess(Model(ParetoI{1.0, 2.5}), 10.0) ==
          doctest::Approx(10.0 / 1.5).epsilon(1e-14));
    CHECK(mean_excess(Model(Gpd{0.5, 1.0, 0.0}), 2.0) == doctest::Approx(4.0).epsilon(1e-14));
    for (double u : {0.5, 1.0, 7.0})
        CHECK(mean_excess(Model(Exponential{2.0}), u) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(mean_excess(Model(ParetoII{2.0, 3.0}), 5.0) ==
          doctest::Approx(7.0 / 2.0).epsilon(1e-14));

    // undefined cases
    CHECK_THROWS_AS((void)mean_excess(Model(ParetoI{1.0, 0.9}), 2.0), std::domain_error);
    CHECK_THROWS_AS((void)mean_excess(Model(Gpd{1.2, 1.0, 0.0}), 2.0), std::domain_error);
    // lognormal asymptote: flagged and only valid for u > exp(mu)
    CHECK(mean_excess_is_asymptotic(Model(Lognormal{0.0, 1.0})));
    CHECK_FALSE(mean_excess_is_asymptotic(Model(Exponential{1.0})));
    CHECK(mean_excess(Model(Lognormal{0.0, 1.0}), 10.0) ==
          doctest::Approx(10.0 / std::log(10.0)).epsilon(1e-14));
    CHECK_THROWS_AS((void)mean_excess(Model(Lognormal{0.0, 1.0}), 0.9), std::domain_error);
}

TEST_CASE("van der Wijk proportionality: pareto mean excess over threshold is constant") {
    const Model m(ParetoI{2.0, 3.0});
    for (double u = 2.0; u < 40.0; u += 0.61)
        REQUIRE(mean_excess(m, u) / u == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("gamma mean excess matches quadrature of the survival function") {
    // e(u) = int_u^inf S(t) dt / S(u)
    const Model m(GammaDist{2.5, 1.5});
    for (double u : {0.5, 2.0, 6.0}) {
        const int n = 200000;
        const double hi = 60.0;
        const double h = (hi - u) / n;
        double sum = 0.5 * (survival(m, u) + survival(m, hi));
        for (int i = 1; i < n; ++i)
            sum += survival(m, u + i * h);
        const double oracle = sum * h / survival(m, u);
        CHECK(mean_excess(m, u) == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("lorenz closed forms against the quadrature oracle") {
    CHECK(lorenz(Model(ParetoI{1.0, 2.0}), 0.75) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(lorenz(Model(Lognormal{0.0, 1.0}), 0.5) ==
          doctest::Approx(0.15865525393145707).epsilon(1e-12));
    CHECK(lorenz(Model(Exponential{1.0}), 1e-9) < 1e-7); // L(0+) -> 0

    for (const Model& m : kFiniteMeanModels) {
        for (double u : {0.2, 0.5, 0.9})
            REQUIRE(lorenz(m, u) == doctest::Approx(lorenz_by_quadrature(m, u)).epsilon(5e-6));
        // non-decreasing, below the diagonal, toward 1
        double prev = 0.0;
        for (int i = 1; i <= 99; ++i) {
            const double u = i / 100.0;
            const double L = lorenz(m, u);
            REQUIRE(L >= prev - 1e-15);
            REQUIRE(L <= u + 1e-12);
            prev = L;
        }
        REQUIRE(lorenz(m, 0.999999) > 0.98);
    }

    CHECK_THROWS_AS((void)lorenz(Model(ParetoI{1.0, 0.8}), 0.5), std::domain_error);
    CHECK_THROWS_AS((void)lorenz(Model(Gpd{1.5, 1.0, 0.0}), 0.5), std::domain_error);
    CHECK_THROWS_AS((void)lorenz(Model(Gpd{0.5, 1.0, -1.0}), 0.5), std::domain_error);
}

TEST_CASE("zenga is the lorenz transform for every finite-mean model") {
    for (const Model& m : kFiniteMeanModels) {
        for (int i = 1; i <= 999; ++i) {
            const double u = i / 1000.0;
            const double L = lorenz(m, u);
            REQUIRE(std::fabs(zenga(m, u) - (u - L) / (u * (1.0 - L))) < 1e-10);
        }
    }
    CHECK_THROWS_AS((void)zenga(Model(ParetoI{1.0, 1.0}), 0.5), std::domain_error);
}

TEST_CASE("zenga curve shapes per family") {
    // pareto: strictly increasing, in [0,1]
    const Model pa(ParetoI{1.0, 2.0});
    CHECK(zenga(pa, 0.5) == doctest::Approx(0.5857864376269049).epsilon(1e-12));
    double prev = -1.0;
    for (int i = 1; i <= 99; ++i) {
        const double z = zenga(pa, i / 100.0);
        REQUIRE(z > prev);
        REQUIRE(z >= 0.0);
        REQUIRE(z <= 1.0);
        prev = z;
    }
    // exponential: independent of lambda, interior minimum at u = 0.8336
    for (int i = 1; i <= 99; ++i) {
        const double u = i / 100.0;
        REQUIRE(zenga(Model(Exponential{1.0}), u) ==
                doctest::Approx(zenga(Model(Exponential{3.7}), u)).epsilon(1e-12));
    }
    double best_u = 0.0, best_v = 2.0;
    for (int i = 1; i < 100000; ++i) {
        const double u = i / 100000.0;
        const double v = zenga(Model(Exponential{1.0}), u);
        if (v < best_v) {
            best_v = v;
            best_u = u;
        }
    }
    CHECK(best_u == doctest::Approx(0.8336).epsilon(0.005));
    CHECK(best_v == doctest::Approx(0.7701).epsilon(2e-4));
    // lognormal: scale-free in mu
    for (double u : {0.2, 0.5, 0.8})
        CHECK(zenga(Model(Lognormal{0.0, 1.0}), u) ==
              doctest::Approx(zenga(Model(Lognormal{3.0, 1.0}), u)).epsilon(1e-12));
}

TEST_CASE("seeded sampling is deterministic, sorted and in support") {
    const Model m(ParetoI{2.0, 2.5});
    const Sample a = draw_sample(m, 1000, 9);
    const Sample b = draw_sample(m, 1000, 9);
    REQUIRE(a.values() == b.values());
    const Sample c = draw_sample(m, 1000, 10);
    CHECK(a.values() != c.values());
    for (std::size_t i = 1; i < a.size(); ++i)
        REQUIRE(a.values()[i - 1] <= a.values()[i]);
    CHECK(a.min() >= 2.0);

    const Sample one = draw_sample(Model(GammaDist{2.0, 1.0}), 1, 5);
    CHECK(one.size() == 1);
    CHECK(one.min() > 0.0);

    CHECK_THROWS_AS((void)draw_sample(m, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)draw_sample(Model(Gpd{0.5, 1.0, -2.0}), 10, 1), std::domain_error);
}

TEST_CASE("lognormal draw reproduces the tail probability above 2") {
    const Sample s = draw_sample(Model(Lognormal{0.0, 1.0}), 500, 2);
    int above = 0;
    for (double v : s.values())
        above += v > 2.0;
    // P(X > 2) = 1 - Phi(log 2) = 0.2441
    CHECK(above / 500.0 == doctest::Approx(0.244).epsilon(0.25));
    CHECK(std::fabs(above / 500.0 - 0.244) < 0.06);
}

TEST_CASE("pareto draw reproduces the closed-form mean") {
    const Sample s = draw_sample(Model(ParetoI{1.0, 2.5}), 100000, 42);
    double mean_hat = 0.0;
    for (double v : s.values())
        mean_hat += v;
    mean_hat /= static_cast<double>(s.size());
    CHECK(std::fabs(mean_hat - 2.5 / 1.5) < 0.02 * (2.5 / 1.5));
}

TEST_CASE("empirical survival tracks the closed form at the deciles") {
    const Model m(ParetoI{1.0, 2.0});
    const Sample s = draw_sample(m, 100000, 42);
    for (int d = 1; d <= 9; ++d) {
        const double x = s.values()[(s.size() * d) / 10];
        double emp = 0.0;
        for (double v : s.values())
            emp += v > x;
        emp /= static_cast<double>(s.size());
        REQUIRE(std::fabs(emp - survival(m, x)) < 0.01);
    }
}
