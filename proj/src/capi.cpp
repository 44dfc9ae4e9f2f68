#include "heavytail.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "heavytail/diagnostics.hpp"
#include "heavytail/empirical.hpp"
#include "heavytail/figures.hpp"
#include "heavytail/json_out.hpp"
#include "heavytail/model.hpp"
#include "heavytail/powerstudy.hpp"
#include "heavytail/render.hpp"
#include "heavytail/sample.hpp"

struct ht_model {
    heavytail::Model model;
};

struct ht_sample {
    heavytail::Sample sample;
};

struct ht_series {
    std::vector<double> x;
    std::vector<double> y;
};

namespace {

thread_local std::string t_last_error;

template <class Fn>
ht_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return HT_OK;
    } catch (const heavytail::data_error& e) {
        t_last_error = e.what();
        return HT_ERR_DATA;
    } catch (const std::domain_error& e) {
        t_last_error = e.what();
        return HT_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        t_last_error = e.what();
        return HT_ERR_DOMAIN;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return HT_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return HT_ERR_INTERNAL;
    }
}

ht_status null_arg(const char* what) noexcept {
    t_last_error = std::string("null argument: ") + what;
    return HT_ERR_CONFIG;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ht_status make_model(heavytail::Model::Family family, ht_model** out) {
    if (!out)
        return null_arg("out");
    *out = nullptr;
    return guarded([&] { *out = new ht_model{heavytail::Model(std::move(family))}; });
}

heavytail::FormulaMode to_mode(ht_formula_mode mode) {
    return mode == HT_FORMULA_PAPER_VERBATIM ? heavytail::FormulaMode::PaperVerbatim
                                             : heavytail::FormulaMode::Corrected;
}

heavytail::VerdictConfig to_config(const ht_verdict_config* cfg) {
    heavytail::VerdictConfig out;
    if (!cfg)
        return out;
    out.tail_fraction = cfg->tail_fraction;
    out.r2_min = cfg->r2_min;
    out.me_cut = cfg->me_cut;
    out.zenga.constant_range = cfg->zenga_constant_range;
    out.zenga.increasing_slope = cfg->zenga_increasing_slope;
    out.zenga.spearman_min = cfg->zenga_spearman_min;
    out.zenga.rise_min = cfg->zenga_rise_min;
    out.zenga.trim_lo = cfg->zenga_trim_lo;
    out.zenga.trim_hi = cfg->zenga_trim_hi;
    out.aggregation_delta_max = cfg->aggregation_delta_max;
    out.formula_mode = to_mode(cfg->formula_mode);
    return out;
}

ht_series* series_from(const heavytail::PlotSeries& s) {
    return new ht_series{s.x, s.y};
}

} // namespace

extern "C" {

const char* ht_version(void) { return "1.0.0"; }

const char* ht_last_error(void) { return t_last_error.c_str(); }

void ht_string_free(char* s) { std::free(s); }

ht_status ht_model_pareto1(double x0, double alpha, ht_model** out) {
    return make_model(heavytail::ParetoI{x0, alpha}, out);
}

ht_status ht_model_pareto2(double b, double alpha, ht_model** out) {
    return make_model(heavytail::ParetoII{b, alpha}, out);
}

ht_status ht_model_gpd(double xi, double beta, double nu, ht_model** out) {
    return make_model(heavytail::Gpd{xi, beta, nu}, out);
}

ht_status ht_model_lognormal(double mu, double sigma, ht_model** out) {
    return make_model(heavytail::Lognormal{mu, sigma}, out);
}

ht_status ht_model_exponential(double lambda, ht_model** out) {
    return make_model(heavytail::Exponential{lambda}, out);
}

ht_status ht_model_gamma(double shape, double scale, ht_model** out) {
    return make_model(heavytail::GammaDist{shape, scale}, out);
}

void ht_model_free(ht_model* m) { delete m; }

ht_status ht_model_name(const ht_model* m, char** out) {
    if (!m || !out)
        return null_arg("model/out");
    return guarded([&] { *out = dup_string(m->model.name()); });
}

ht_status ht_model_survival(const ht_model* m, double x, double* out) {
    if (!m || !out)
        return null_arg("model/out");
    return guarded([&] { *out = heavytail::survival(m->model, x); });
}

ht_status ht_model_quantile(const ht_model* m, double u, double* out) {
    if (!m || !out)
        return null_arg("model/out");
    return guarded([&] { *out = heavytail::quantile(m->model, u); });
}

ht_status ht_model_mean(const ht_model* m, double* out) {
    if (!m || !out)
        return null_arg("model/out");
    return guarded([&] { *out = heavytail::mean(m->model); });
}

ht_status ht_model_mean_excess(const ht_model* m, double u, double* out,
                               int* is_asymptotic) {
    if (!m || !out)
        return null_arg("model/out");
    return guarded([&] {
        *out = heavytail::mean_excess(m->model, u);
        if (is_asymptotic)
            *is_asymptotic = heavytail::mean_excess_is_asymptotic(m->model) ? 1 : 0;
    });
}

ht_status ht_model_lorenz(const ht_model* m, double u, double* out) {
    if (!m || !out)
        return null_arg("model/out");
    return guarded([&] { *out = heavytail::lorenz(m->model, u); });
}

ht_status ht_model_zenga(const ht_model* m, double u, double* out) {
    if (!m || !out)
        return null_arg("model/out");
    return guarded([&] { *out = heavytail::zenga(m->model, u); });
}

ht_status ht_model_draw(const ht_model* m, size_t n, uint64_t seed, ht_sample** out) {
    if (!m || !out)
        return null_arg("model/out");
    *out = nullptr;
    return guarded([&] { *out = new ht_sample{heavytail::draw_sample(m->model, n, seed)}; });
}

ht_status ht_sample_create(const double* values, size_t n, ht_sample** out,
                           size_t* dropped) {
    if (!out || (!values && n > 0))
        return null_arg("values/out");
    *out = nullptr;
    return guarded([&] {
        auto intake = heavytail::make_sample(std::vector<double>(values, values + n));
        if (dropped)
            *dropped = intake.dropped_nonpositive + intake.dropped_nonfinite;
        *out = new ht_sample{std::move(intake.sample)};
    });
}

void ht_sample_free(ht_sample* s) { delete s; }

size_t ht_sample_size(const ht_sample* s) { return s ? s->sample.size() : 0; }

const double* ht_sample_values(const ht_sample* s) {
    return s ? s->sample.values().data() : nullptr;
}

ht_status ht_sample_truncate(const ht_sample* s, double threshold, ht_sample** out) {
    if (!s || !out)
        return null_arg("sample/out");
    *out = nullptr;
    return guarded([&] { *out = new ht_sample{heavytail::tail_truncate(s->sample, threshold)}; });
}

ht_status ht_zipf_series(const ht_sample* s, double bin_base, ht_series** out) {
    if (!s || !out)
        return null_arg("sample/out");
    *out = nullptr;
    return guarded([&] {
        std::optional<double> base;
        if (bin_base > 1.0)
            base = bin_base;
        *out = series_from(heavytail::zipf_series(s->sample, base));
    });
}

ht_status ht_mean_excess_series(const ht_sample* s, size_t cut, ht_series** out) {
    if (!s || !out)
        return null_arg("sample/out");
    *out = nullptr;
    return guarded([&] { *out = series_from(heavytail::mean_excess_points(s->sample, cut)); });
}

ht_status ht_lorenz_series(const ht_sample* s, ht_series** out) {
    if (!s || !out)
        return null_arg("sample/out");
    *out = nullptr;
    return guarded([&] { *out = series_from(heavytail::empirical_lorenz(s->sample)); });
}

ht_status ht_zenga_series(const ht_sample* s, int rescale_endpoints, ht_series** out) {
    if (!s || !out)
        return null_arg("sample/out");
    *out = nullptr;
    return guarded([&] {
        const auto z = heavytail::empirical_zenga(s->sample, rescale_endpoints != 0);
        *out = new ht_series{z.u, z.z};
    });
}

ht_status ht_spacing_series(const ht_sample* s, ht_series** out,
                            double* rank_correlation) {
    if (!s || !out)
        return null_arg("sample/out");
    *out = nullptr;
    return guarded([&] {
        auto res = heavytail::spacing_ratios(s->sample);
        if (rank_correlation)
            *rank_correlation = res.rank_correlation;
        *out = series_from(res.series);
    });
}

ht_status ht_bootstrap_series(const ht_sample* s, size_t replicates, uint64_t seed,
                              ht_series** out, size_t* skipped) {
    if (!s || !out)
        return null_arg("sample/out");
    *out = nullptr;
    return guarded([&] {
        const auto boot = heavytail::bootstrap_moments(s->sample, replicates, seed);
        auto* series = new ht_series{};
        series->x.reserve(boot.points.size());
        series->y.reserve(boot.points.size());
        for (const auto& p : boot.points) {
            series->x.push_back(p.cv);
            series->y.push_back(p.skewness);
        }
        if (skipped)
            *skipped = boot.skipped;
        *out = series;
    });
}

size_t ht_series_size(const ht_series* s) { return s ? s->x.size() : 0; }

const double* ht_series_x(const ht_series* s) { return s ? s->x.data() : nullptr; }

const double* ht_series_y(const ht_series* s) { return s ? s->y.data() : nullptr; }

void ht_series_free(ht_series* s) { delete s; }

ht_status ht_moment_stats(const ht_sample* s, double* cv, double* skewness) {
    if (!s || !cv || !skewness)
        return null_arg("sample/cv/skewness");
    return guarded([&] {
        const auto pt = heavytail::moment_stats(s->sample);
        *cv = pt.cv;
        *skewness = pt.skewness;
    });
}

ht_status ht_classify(double cv, double skewness, ht_formula_mode mode,
                      const char** zone, int* rule_of_thumb_override,
                      int* thin_tail_precheck) {
    if (!zone)
        return null_arg("zone");
    return guarded([&] {
        const auto res = heavytail::classify_moment_point(
            heavytail::MomentPoint{cv, skewness}, to_mode(mode));
        *zone = heavytail::zone_name(res.zone);
        if (rule_of_thumb_override)
            *rule_of_thumb_override = res.rule_of_thumb_override ? 1 : 0;
        if (thin_tail_precheck)
            *thin_tail_precheck = res.thin_tail_precheck ? 1 : 0;
    });
}

void ht_verdict_config_init(ht_verdict_config* cfg) {
    if (!cfg)
        return;
    const heavytail::VerdictConfig d;
    cfg->tail_fraction = d.tail_fraction;
    cfg->r2_min = d.r2_min;
    cfg->me_cut = d.me_cut;
    cfg->zenga_constant_range = d.zenga.constant_range;
    cfg->zenga_increasing_slope = d.zenga.increasing_slope;
    cfg->zenga_spearman_min = d.zenga.spearman_min;
    cfg->zenga_rise_min = d.zenga.rise_min;
    cfg->zenga_trim_lo = d.zenga.trim_lo;
    cfg->zenga_trim_hi = d.zenga.trim_hi;
    cfg->aggregation_delta_max = d.aggregation_delta_max;
    cfg->formula_mode = HT_FORMULA_CORRECTED;
    cfg->seed = 42;
}

ht_status ht_verdict_json(const ht_sample* s, const ht_verdict_config* cfg,
                          char** json_out) {
    if (!s || !json_out)
        return null_arg("sample/json_out");
    *json_out = nullptr;
    return guarded([&] {
        const auto config = to_config(cfg);
        const auto v = heavytail::verdict(s->sample, config);
        *json_out = dup_string(
            heavytail::verdict_json(v, config, s->sample.size(), cfg ? cfg->seed : 42));
    });
}

ht_status ht_aggregation_stability(const ht_sample* s, uint64_t seed,
                                   const ht_verdict_config* cfg,
                                   double* slope_original, double* slope_aggregated,
                                   double* delta, int* applicable, int* pass) {
    if (!s)
        return null_arg("sample");
    return guarded([&] {
        const auto res =
            heavytail::aggregation_stability(s->sample, seed, to_config(cfg));
        if (slope_original)
            *slope_original = res.slope_original;
        if (slope_aggregated)
            *slope_aggregated = res.slope_aggregated;
        if (delta)
            *delta = res.delta;
        if (applicable)
            *applicable = res.applicable ? 1 : 0;
        if (pass)
            *pass = res.pass ? 1 : 0;
    });
}

ht_status ht_power_error_rates(const ht_model* truth, size_t n, size_t trials,
                               uint64_t seed, ht_formula_mode mode, unsigned threads,
                               int as_table, char** out) {
    if (!truth || !out)
        return null_arg("model/out");
    *out = nullptr;
    return guarded([&] {
        const auto rep = heavytail::classification_error_rates(
            truth->model, n, trials, seed, to_mode(mode), threads);
        *out = dup_string(as_table ? heavytail::power_report_table(rep)
                                   : heavytail::power_report_json(rep));
    });
}

ht_status ht_power_me(const ht_model* truth, size_t n, size_t trials, uint64_t seed,
                      unsigned threads, int as_table, char** out) {
    if (!truth || !out)
        return null_arg("model/out");
    *out = nullptr;
    return guarded([&] {
        const auto rep = heavytail::me_discrimination_power(n, trials, seed,
                                                            truth->model, threads);
        *out = dup_string(as_table ? heavytail::me_power_table(rep)
                                   : heavytail::me_power_json(rep));
    });
}

ht_status ht_figure_zipf_svg(const ht_sample* s, double bin_base, char** svg_out) {
    if (!s || !svg_out)
        return null_arg("sample/svg_out");
    *svg_out = nullptr;
    return guarded([&] {
        std::optional<double> base;
        if (bin_base > 1.0)
            base = bin_base;
        const auto fig = heavytail::zipf_figure(heavytail::zipf_series(s->sample, base));
        *svg_out = dup_string(heavytail::render_figure(fig));
    });
}

ht_status ht_figure_meplot_svg(const ht_sample* s, size_t cut, char** svg_out) {
    if (!s || !svg_out)
        return null_arg("sample/svg_out");
    *svg_out = nullptr;
    return guarded([&] {
        const auto fig =
            heavytail::meplot_figure(heavytail::meplot_series(s->sample, cut));
        *svg_out = dup_string(heavytail::render_figure(fig));
    });
}

ht_status ht_figure_mrplot_svg(const ht_sample* s, ht_formula_mode mode,
                               size_t bootstrap, uint64_t seed, char** svg_out) {
    if (!s || !svg_out)
        return null_arg("sample/svg_out");
    *svg_out = nullptr;
    return guarded([&] {
        const auto pt = heavytail::moment_stats(s->sample);
        std::vector<heavytail::MomentPoint> cloud;
        if (bootstrap > 0)
            cloud = heavytail::bootstrap_moments(s->sample, bootstrap, seed).points;
        const auto fig = heavytail::mrplot_figure(pt, to_mode(mode), cloud);
        *svg_out = dup_string(heavytail::render_figure(fig));
    });
}

ht_status ht_figure_zenga_svg(const ht_sample* s, int rescale_endpoints,
                              char** svg_out) {
    if (!s || !svg_out)
        return null_arg("sample/svg_out");
    *svg_out = nullptr;
    return guarded([&] {
        const auto fig = heavytail::zenga_figure(
            heavytail::empirical_zenga(s->sample, rescale_endpoints != 0));
        *svg_out = dup_string(heavytail::render_figure(fig));
    });
}

ht_status ht_moment_json(const ht_sample* s, ht_formula_mode mode, size_t bootstrap,
                         uint64_t seed, char** json_out) {
    if (!s || !json_out)
        return null_arg("sample/json_out");
    *json_out = nullptr;
    return guarded([&] {
        const auto pt = heavytail::moment_stats(s->sample);
        const auto zone = heavytail::classify_moment_point(pt, to_mode(mode));
        heavytail::BootstrapMoments boot;
        const heavytail::BootstrapMoments* boot_ptr = nullptr;
        if (bootstrap > 0) {
            boot = heavytail::bootstrap_moments(s->sample, bootstrap, seed);
            boot_ptr = &boot;
        }
        *json_out = dup_string(heavytail::moment_json(pt, zone, to_mode(mode),
                                                      s->sample.size(), boot_ptr, seed));
    });
}

} // extern "C"
