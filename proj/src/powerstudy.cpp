#include "heavytail/powerstudy.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "heavytail/empirical.hpp"
#include "heavytail/fit.hpp"

namespace heavytail {

namespace {

unsigned resolve_threads(unsigned requested, std::size_t trials) {
    unsigned t = requested ? requested : std::thread::hardware_concurrency();
    if (t == 0)
        t = 1;
    if (t > trials)
        t = static_cast<unsigned>(trials);
    return t;
}

// Runs fn(trial_index) over [0, trials) across worker threads.
template <class Fn>
void parallel_trials(std::size_t trials, unsigned threads, Fn&& fn) {
    if (threads <= 1) {
        for (std::size_t t = 0; t < trials; ++t)
            fn(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t t = next.fetch_add(1); t < trials; t = next.fetch_add(1))
                fn(t);
        });
    }
    for (auto& th : pool)
        th.join();
}

bool zone_hits_target(const Model& truth, const ZoneResult& z) {
    const auto& fam = truth.family();
    if (std::holds_alternative<ParetoI>(fam) || std::holds_alternative<ParetoII>(fam) ||
        std::holds_alternative<Gpd>(fam)) {
        return z.zone == Zone::Paretian || z.zone == Zone::AbovePareto;
        // rule_of_thumb_override already maps Gray into Paretian
    }
    if (std::holds_alternative<Lognormal>(fam))
        return z.zone == Zone::Lognormal || z.zone == Zone::Gray;
    return z.zone == Zone::ExponentialThin; // exponential, gamma
}

} // namespace

PowerReport classification_error_rates(const Model& truth, std::size_t n,
                                       std::size_t trials, std::uint64_t seed,
                                       FormulaMode mode, unsigned threads) {
    if (trials < 100)
        throw std::invalid_argument("classification_error_rates: trials must be >= 100");
    if (n < 3)
        throw std::invalid_argument("classification_error_rates: n must be >= 3");

    std::atomic<std::size_t> errors{0};
    std::atomic<std::size_t> skipped{0};
    parallel_trials(trials, resolve_threads(threads, trials), [&](std::size_t t) {
        const Sample s = draw_sample(truth, n, seed + t);
        MomentPoint pt;
        try {
            pt = moment_stats(s);
        } catch (const data_error&) {
            skipped.fetch_add(1);
            return;
        }
        if (!zone_hits_target(truth, classify_moment_point(pt, mode)))
            errors.fetch_add(1);
    });

    PowerReport rep;
    rep.model = truth.name();
    rep.n = n;
    rep.trials = trials;
    rep.errors = errors.load();
    rep.skipped = skipped.load();
    rep.seed = seed;
    rep.formula_mode = mode;
    const double effective = static_cast<double>(trials - rep.skipped);
    if (effective > 0.0) {
        rep.error_rate = static_cast<double>(rep.errors) / effective;
        rep.ci_halfwidth =
            1.96 * std::sqrt(rep.error_rate * (1.0 - rep.error_rate) / effective);
    }
    return rep;
}

MePowerReport me_discrimination_power(std::size_t n, std::size_t trials,
                                      std::uint64_t seed, const Model& truth,
                                      unsigned threads) {
    if (trials < 100)
        throw std::invalid_argument("me_discrimination_power: trials must be >= 100");
    if (n < 20)
        throw std::invalid_argument("me_discrimination_power: n must be >= 20");

    std::atomic<std::size_t> distinguished{0};
    parallel_trials(trials, resolve_threads(threads, trials), [&](std::size_t t) {
        const Sample s = draw_sample(truth, n, seed + t);
        const PlotSeries me = mean_excess_points(s, 5);
        const auto [first, last] = decile_band(me.size(), 1, 9);
        if (last - first < 4)
            return;
        const QuadFit fit = quadratic_fit(
            std::span<const double>(me.x).subspan(first, last - first),
            std::span<const double>(me.y).subspan(first, last - first));
        if (fit.ok && fit.c2 < 0.0 && std::abs(fit.c2) > 2.0 * fit.se_c2)
            distinguished.fetch_add(1);
    });

    MePowerReport rep;
    rep.model = truth.name();
    rep.n = n;
    rep.trials = trials;
    rep.distinguished = distinguished.load();
    rep.fraction = static_cast<double>(rep.distinguished) / static_cast<double>(trials);
    rep.seed = seed;
    return rep;
}

} // namespace heavytail
