#pragma once

#include <cstdint>
#include <string>

#include "heavytail/diagnostics.hpp"
#include "heavytail/model.hpp"

namespace heavytail {

struct PowerReport {
    std::string model;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::size_t errors = 0;
    std::size_t skipped = 0;     // degenerate draws
    double error_rate = 0;       // errors / (trials - skipped)
    double ci_halfwidth = 0;     // normal-approximation binomial 95% half-width
    std::uint64_t seed = 0;
    FormulaMode formula_mode = FormulaMode::Corrected;
};

// Monte Carlo zone-classification error rate for a known generating model.
// Trial t draws with seed + t, so trials can run concurrently and the
// aggregate is order-independent. A trial counts as an error when the zone
// misses the model's target set:
//   pareto1/pareto2/gpd -> {Paretian, AbovePareto, Gray with the rule-of-thumb
//                           override}
//   lognormal           -> {Lognormal, Gray}
//   exponential/gamma   -> {ExponentialThin}
// Needs trials >= 100. threads = 0 picks the hardware concurrency.
PowerReport classification_error_rates(const Model& truth, std::size_t n,
                                       std::size_t trials, std::uint64_t seed,
                                       FormulaMode mode, unsigned threads = 0);

struct MePowerReport {
    std::string model;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::size_t distinguished = 0;
    double fraction = 0;
    std::uint64_t seed = 0;
};

// Fraction of trials whose mean excess plot shows significant concavity:
// a quadratic fit over threshold deciles 1-9 with a negative quadratic
// coefficient exceeding twice its standard error. Run against a lognormal
// to measure discrimination power, against a Pareto as a control.
// Needs trials >= 100.
MePowerReport me_discrimination_power(std::size_t n, std::size_t trials,
                                      std::uint64_t seed, const Model& truth,
                                      unsigned threads = 0);

} // namespace heavytail
