#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "heavytail/sample.hpp"

namespace heavytail {

// Parametric families with closed-form survival / quantile / mean excess /
// Lorenz machinery. These are the oracles the empirical routines are
// validated against.

struct ParetoI {
    double x0;    // scale, lower support bound
    double alpha; // tail index
};

struct ParetoII { // Lomax
    double b;
    double alpha;
};

struct Gpd {
    double xi;   // shape; xi < 0 gives bounded support [nu, nu - beta/xi]
    double beta; // scale
    double nu;   // location
};

struct Lognormal {
    double mu;
    double sigma;
};

struct Exponential {
    double lambda; // rate
};

struct GammaDist {
    double shape;
    double scale;
};

class Model {
public:
    using Family = std::variant<ParetoI, ParetoII, Gpd, Lognormal, Exponential, GammaDist>;

    // Validates parameters; throws std::domain_error on violations.
    explicit Model(Family family);

    const Family& family() const noexcept { return family_; }

    // e.g. "pareto1(x0=1, alpha=2.5)"
    std::string name() const;

private:
    Family family_;
};

// Survival function 1 - F(x). Below-support x returns 1.
double survival(const Model& m, double x);

// Inverse cdf, u strictly inside (0,1).
double quantile(const Model& m, double u);

// E[X]; throws std::domain_error when infinite.
double mean(const Model& m);

// Theoretical mean excess e(u) = E[X - u | X > u].
// Exact closed form for all families except the lognormal, where only the
// large-u leading-order asymptote sigma^2 u / (log u - mu) is available
// (see mean_excess_is_asymptotic). ParetoI/II need alpha > 1, GPD xi < 1.
double mean_excess(const Model& m, double u);
bool mean_excess_is_asymptotic(const Model& m) noexcept;

// Lorenz curve L(u), u in (0,1); requires finite mean and non-negative
// support. The lognormal uses the standard identity L(u) = Phi(Phi^-1(u) - sigma).
double lorenz(const Model& m, double u);

// Zenga curve Z(u) = 1 - Q-(u)/Q+(u), computed from the Lorenz curve via
// Z = (u - L) / (u (1 - L)) so the two are consistent by construction.
double zenga(const Model& m, double u);

// Seeded inverse-transform sampling; deterministic for fixed (m, n, seed),
// output sorted ascending. Requires a non-negative support (diagnostics
// operate on positive data).
Sample draw_sample(const Model& m, std::size_t n, std::uint64_t seed);

} // namespace heavytail
