#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "heavytail/special.hpp"

using namespace heavytail::special;

TEST_CASE("normal cdf matches known values") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(normal_cdf(-1.0) == doctest::Approx(0.15865525393145707).epsilon(1e-12));
    CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-12));
    CHECK(normal_cdf(-8.0) == doctest::Approx(6.22096057427178e-16).epsilon(1e-6));
}

TEST_CASE("normal quantile inverts the cdf to high accuracy") {
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
    for (int i = 1; i <= 9999; ++i) {
        const double p = i / 10000.0;
        const double err = std::fabs(normal_cdf(normal_quantile(p)) - p);
        REQUIRE(err < 1e-13);
    }
    // deep tails
    for (double p : {1e-9, 1e-6, 1.0 - 1e-6}) {
        const double err = std::fabs(normal_cdf(normal_quantile(p)) - p);
        CHECK(err < 1e-9 * std::max(p, 1.0 - p) + 1e-15);
    }
    CHECK_THROWS_AS((void)normal_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS((void)normal_quantile(1.0), std::domain_error);
}

TEST_CASE("incomplete gamma agrees with elementary special cases") {
    // P(1, x) = 1 - exp(-x)
    for (double x : {0.1, 0.5, 1.0, 3.0, 10.0})
        CHECK(gamma_p(1.0, x) == doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-13));
    // P(1/2, x) = erf(sqrt(x))
    for (double x : {0.2, 1.0, 4.0})
        CHECK(gamma_p(0.5, x) == doctest::Approx(std::erf(std::sqrt(x))).epsilon(1e-13));
    // P(2, x) = 1 - e^-x (1 + x)
    for (double x : {0.5, 2.0, 7.0})
        CHECK(gamma_p(2.0, x) ==
              doctest::Approx(1.0 - std::exp(-x) * (1.0 + x)).epsilon(1e-13));
    CHECK(gamma_p(3.0, 0.0) == 0.0);
    CHECK(gamma_q(3.0, 0.0) == 1.0);
    for (double a : {0.3, 1.0, 2.5, 40.0})
        for (double x : {0.01, 1.0, 5.0, 80.0})
            CHECK(gamma_p(a, x) + gamma_q(a, x) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)gamma_p(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)gamma_p(1.0, -1.0), std::domain_error);
}

TEST_CASE("gamma quantile round trips") {
    for (double a : {0.4, 1.0, 2.5, 11.0}) {
        for (int i = 1; i <= 999; ++i) {
            const double p = i / 1000.0;
            const double x = gamma_p_inv(a, p);
            REQUIRE(std::fabs(gamma_p(a, x) - p) < 1e-12);
        }
    }
    CHECK_THROWS_AS((void)gamma_p_inv(2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)gamma_p_inv(2.0, 1.0), std::domain_error);
}
