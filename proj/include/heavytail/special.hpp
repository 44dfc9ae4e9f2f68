#pragma once

namespace heavytail::special {

// Standard normal cdf, evaluated through erfc for accuracy in both tails.
double normal_cdf(double x);

// Inverse standard normal cdf on (0,1). Rational approximation (Acklam)
// refined with one Halley step; relative error well below 1e-9.
double normal_quantile(double p);

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x),
// a > 0, x >= 0. Series expansion for x < a+1, continued fraction otherwise.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Inverse of P(a,.) in x for p in (0,1).
double gamma_p_inv(double a, double p);

} // namespace heavytail::special
