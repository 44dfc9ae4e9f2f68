#include "heavytail/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "heavytail/rng.hpp"
#include "heavytail/special.hpp"

namespace heavytail {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

void require(bool cond, const char* msg) {
    if (!cond)
        throw std::domain_error(msg);
}

void check_finite(double v, const char* msg) {
    if (!std::isfinite(v))
        throw std::domain_error(msg);
}

std::string fmt_params(const char* name, std::initializer_list<std::pair<const char*, double>> ps) {
    std::string out(name);
    out += '(';
    bool first = true;
    char buf[64];
    for (const auto& [key, val] : ps) {
        if (!first) out += ", ";
        first = false;
        std::snprintf(buf, sizeof buf, "%s=%g", key, val);
        out += buf;
    }
    out += ')';
    return out;
}

void check_probability(double u) {
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("probability argument must lie strictly in (0,1)");
}

} // namespace

Model::Model(Family family) : family_(std::move(family)) {
    std::visit(overloaded{
                   [](const ParetoI& p) {
                       check_finite(p.x0, "pareto1: x0 must be finite");
                       check_finite(p.alpha, "pareto1: alpha must be finite");
                       require(p.x0 > 0.0, "pareto1: scale x0 must be > 0");
                       require(p.alpha > 0.0, "pareto1: shape alpha must be > 0");
                   },
                   [](const ParetoII& p) {
                       check_finite(p.b, "pareto2: b must be finite");
                       check_finite(p.alpha, "pareto2: alpha must be finite");
                       require(p.b > 0.0, "pareto2: scale b must be > 0");
                       require(p.alpha > 0.0, "pareto2: shape alpha must be > 0");
                   },
                   [](const Gpd& p) {
                       check_finite(p.xi, "gpd: xi must be finite");
                       check_finite(p.beta, "gpd: beta must be finite");
                       check_finite(p.nu, "gpd: nu must be finite");
                       require(p.beta > 0.0, "gpd: scale beta must be > 0");
                   },
                   [](const Lognormal& p) {
                       check_finite(p.mu, "lognormal: mu must be finite");
                       check_finite(p.sigma, "lognormal: sigma must be finite");
                       require(p.sigma > 0.0, "lognormal: sigma must be > 0");
                   },
                   [](const Exponential& p) {
                       check_finite(p.lambda, "exponential: lambda must be finite");
                       require(p.lambda > 0.0, "exponential: rate lambda must be > 0");
                   },
                   [](const GammaDist& p) {
                       check_finite(p.shape, "gamma: shape must be finite");
                       check_finite(p.scale, "gamma: scale must be finite");
                       require(p.shape > 0.0, "gamma: shape must be > 0");
                       require(p.scale > 0.0, "gamma: scale must be > 0");
                   }},
               family_);
}

std::string Model::name() const {
    return std::visit(
        overloaded{
            [](const ParetoI& p) { return fmt_params("pareto1", {{"x0", p.x0}, {"alpha", p.alpha}}); },
            [](const ParetoII& p) { return fmt_params("pareto2", {{"b", p.b}, {"alpha", p.alpha}}); },
            [](const Gpd& p) { return fmt_params("gpd", {{"xi", p.xi}, {"beta", p.beta}, {"nu", p.nu}}); },
            [](const Lognormal& p) { return fmt_params("lognormal", {{"mu", p.mu}, {"sigma", p.sigma}}); },
            [](const Exponential& p) { return fmt_params("exponential", {{"lambda", p.lambda}}); },
            [](const GammaDist& p) { return fmt_params("gamma", {{"shape", p.shape}, {"scale", p.scale}}); }},
        family());
}

double survival(const Model& m, double x) {
    return std::visit(
        overloaded{
            [x](const ParetoI& p) {
                if (x < p.x0) return 1.0;
                return std::pow(x / p.x0, -p.alpha);
            },
            [x](const ParetoII& p) {
                if (x < 0.0) return 1.0;
                return std::pow(1.0 + x / p.b, -p.alpha);
            },
            [x](const Gpd& p) {
                if (x < p.nu) return 1.0;
                if (p.xi == 0.0) return std::exp(-(x - p.nu) / p.beta);
                double t = 1.0 + p.xi * (x - p.nu) / p.beta;
                if (t <= 0.0) return 0.0; // past the finite endpoint (xi < 0)
                return std::pow(t, -1.0 / p.xi);
            },
            [x](const Lognormal& p) {
                if (x <= 0.0) return 1.0;
                return special::normal_cdf(-(std::log(x) - p.mu) / p.sigma);
            },
            [x](const Exponential& p) {
                if (x < 0.0) return 1.0;
                return std::exp(-p.lambda * x);
            },
            [x](const GammaDist& p) {
                if (x <= 0.0) return 1.0;
                return special::gamma_q(p.shape, x / p.scale);
            }},
        m.family());
}

double quantile(const Model& m, double u) {
    check_probability(u);
    return std::visit(
        overloaded{
            [u](const ParetoI& p) { return p.x0 * std::pow(1.0 - u, -1.0 / p.alpha); },
            [u](const ParetoII& p) { return p.b * (std::pow(1.0 - u, -1.0 / p.alpha) - 1.0); },
            [u](const Gpd& p) {
                if (p.xi == 0.0) return p.nu - p.beta * std::log1p(-u);
                return p.nu + p.beta * (std::pow(1.0 - u, -p.xi) - 1.0) / p.xi;
            },
            [u](const Lognormal& p) { return std::exp(p.mu + p.sigma * special::normal_quantile(u)); },
            [u](const Exponential& p) { return -std::log1p(-u) / p.lambda; },
            [u](const GammaDist& p) { return p.scale * special::gamma_p_inv(p.shape, u); }},
        m.family());
}

double mean(const Model& m) {
    return std::visit(
        overloaded{
            [](const ParetoI& p) {
                require(p.alpha > 1.0, "pareto1: mean undefined for alpha <= 1");
                return p.alpha * p.x0 / (p.alpha - 1.0);
            },
            [](const ParetoII& p) {
                require(p.alpha > 1.0, "pareto2: mean undefined for alpha <= 1");
                return p.b / (p.alpha - 1.0);
            },
            [](const Gpd& p) {
                require(p.xi < 1.0, "gpd: mean undefined for xi >= 1");
                return p.nu + p.beta / (1.0 - p.xi);
            },
            [](const Lognormal& p) { return std::exp(p.mu + 0.5 * p.sigma * p.sigma); },
            [](const Exponential& p) { return 1.0 / p.lambda; },
            [](const GammaDist& p) { return p.shape * p.scale; }},
        m.family());
}

double mean_excess(const Model& m, double u) {
    return std::visit(
        overloaded{
            [&m, u](const ParetoI& p) {
                require(p.alpha > 1.0, "mean excess undefined: pareto1 needs alpha > 1");
                if (u < p.x0) return mean(m) - u;
                return u / (p.alpha - 1.0);
            },
            [&m, u](const ParetoII& p) {
                require(p.alpha > 1.0, "mean excess undefined: pareto2 needs alpha > 1");
                if (u < 0.0) return mean(m) - u;
                return (u + p.b) / (p.alpha - 1.0);
            },
            [&m, u](const Gpd& p) {
                require(p.xi < 1.0, "mean excess undefined: gpd needs xi < 1");
                if (u < p.nu) return mean(m) - u;
                double scale_at_u = p.beta + p.xi * (u - p.nu);
                require(scale_at_u > 0.0, "gpd: threshold outside the support");
                return scale_at_u / (1.0 - p.xi);
            },
            [u](const Lognormal& p) {
                // Only the large-u leading-order asymptote is elementary.
                require(u > std::exp(p.mu),
                        "lognormal mean-excess asymptote requires u > exp(mu)");
                return p.sigma * p.sigma * u / (std::log(u) - p.mu);
            },
            [&m, u](const Exponential& p) {
                if (u < 0.0) return mean(m) - u;
                return 1.0 / p.lambda;
            },
            [&m, u](const GammaDist& p) {
                if (u <= 0.0) return mean(m) - u;
                double x = u / p.scale;
                double qk = special::gamma_q(p.shape, x);
                if (qk <= 0.0) return p.scale; // exponential tail limit
                double qk1 = special::gamma_q(p.shape + 1.0, x);
                return p.shape * p.scale * qk1 / qk - u;
            }},
        m.family());
}

bool mean_excess_is_asymptotic(const Model& m) noexcept {
    return std::holds_alternative<Lognormal>(m.family());
}

double lorenz(const Model& m, double u) {
    check_probability(u);
    return std::visit(
        overloaded{
            [u](const ParetoI& p) {
                require(p.alpha > 1.0, "Lorenz undefined: pareto1 has infinite mean for alpha <= 1");
                return 1.0 - std::pow(1.0 - u, 1.0 - 1.0 / p.alpha);
            },
            [u](const ParetoII& p) {
                require(p.alpha > 1.0, "Lorenz undefined: pareto2 has infinite mean for alpha <= 1");
                return p.alpha * (1.0 - std::pow(1.0 - u, (p.alpha - 1.0) / p.alpha)) -
                       (p.alpha - 1.0) * u;
            },
            [u](const Gpd& p) {
                require(p.xi < 1.0, "Lorenz undefined: gpd has infinite mean for xi >= 1");
                require(p.nu >= 0.0, "Lorenz requires non-negative support (nu >= 0)");
                double total = p.nu + p.beta / (1.0 - p.xi);
                double integral;
                if (p.xi == 0.0) {
                    integral = p.nu * u + p.beta * (u + (1.0 - u) * std::log1p(-u));
                } else {
                    integral = p.nu * u +
                               p.beta / p.xi *
                                   ((1.0 - std::pow(1.0 - u, 1.0 - p.xi)) / (1.0 - p.xi) - u);
                }
                return integral / total;
            },
            [u](const Lognormal& p) {
                // First-moment distribution of LN(mu, sigma) is LN(mu+sigma^2, sigma).
                return special::normal_cdf(special::normal_quantile(u) - p.sigma);
            },
            [u](const Exponential&) { return u + (1.0 - u) * std::log1p(-u); },
            [u](const GammaDist& p) {
                return special::gamma_p(p.shape + 1.0, special::gamma_p_inv(p.shape, u));
            }},
        m.family());
}

double zenga(const Model& m, double u) {
    double L = lorenz(m, u);
    return (u - L) / (u * (1.0 - L));
}

Sample draw_sample(const Model& m, std::size_t n, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("draw_sample: n must be >= 1");
    if (const auto* g = std::get_if<Gpd>(&m.family()); g && g->nu < 0.0)
        throw std::domain_error("draw_sample requires non-negative support (gpd nu >= 0)");

    SplitMix64 rng(seed);
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = quantile(m, rng.next_unit());
    std::sort(values.begin(), values.end());
    return Sample::from_sorted(std::move(values));
}

} // namespace heavytail
