/*
 * heavytail - C API for the heavy-tail diagnostics library.
 *
 * All functions return ht_status; outputs are written through pointers.
 * Objects are opaque handles released with the matching *_free function.
 * Strings returned through char** are heap-allocated; release them with
 * ht_string_free. On failure, ht_last_error() describes the problem for
 * the calling thread.
 */

#ifndef HEAVYTAIL_H
#define HEAVYTAIL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ht_status {
    HT_OK = 0,
    HT_ERR_DOMAIN = 1,   /* parameter or argument outside its domain */
    HT_ERR_DATA = 2,     /* problem with the data itself */
    HT_ERR_CONFIG = 3,   /* null handle / bad configuration */
    HT_ERR_INTERNAL = 4
} ht_status;

typedef enum ht_formula_mode {
    HT_FORMULA_CORRECTED = 0,
    HT_FORMULA_PAPER_VERBATIM = 1
} ht_formula_mode;

typedef struct ht_model ht_model;
typedef struct ht_sample ht_sample;
typedef struct ht_series ht_series;

const char* ht_version(void);
const char* ht_last_error(void); /* thread-local; valid until the next call */
void ht_string_free(char* s);

/* ---- models ---------------------------------------------------------- */

ht_status ht_model_pareto1(double x0, double alpha, ht_model** out);
ht_status ht_model_pareto2(double b, double alpha, ht_model** out);
ht_status ht_model_gpd(double xi, double beta, double nu, ht_model** out);
ht_status ht_model_lognormal(double mu, double sigma, ht_model** out);
ht_status ht_model_exponential(double lambda, ht_model** out);
ht_status ht_model_gamma(double shape, double scale, ht_model** out);
void ht_model_free(ht_model* m);

ht_status ht_model_name(const ht_model* m, char** out);
ht_status ht_model_survival(const ht_model* m, double x, double* out);
ht_status ht_model_quantile(const ht_model* m, double u, double* out);
ht_status ht_model_mean(const ht_model* m, double* out);
/* is_asymptotic is set to 1 for the lognormal large-u approximation */
ht_status ht_model_mean_excess(const ht_model* m, double u, double* out,
                               int* is_asymptotic);
ht_status ht_model_lorenz(const ht_model* m, double u, double* out);
ht_status ht_model_zenga(const ht_model* m, double u, double* out);
ht_status ht_model_draw(const ht_model* m, size_t n, uint64_t seed, ht_sample** out);

/* ---- samples --------------------------------------------------------- */

/* Filters non-finite / non-positive values; *dropped (optional) receives
 * the number of discarded entries. Fails with HT_ERR_DATA when nothing
 * usable remains. */
ht_status ht_sample_create(const double* values, size_t n, ht_sample** out,
                           size_t* dropped);
void ht_sample_free(ht_sample* s);
size_t ht_sample_size(const ht_sample* s);
/* Borrowed pointer to the sorted values; valid while the sample lives. */
const double* ht_sample_values(const ht_sample* s);
ht_status ht_sample_truncate(const ht_sample* s, double threshold, ht_sample** out);

/* ---- series ---------------------------------------------------------- */

/* bin_base <= 1 disables binning. */
ht_status ht_zipf_series(const ht_sample* s, double bin_base, ht_series** out);
ht_status ht_mean_excess_series(const ht_sample* s, size_t cut, ht_series** out);
ht_status ht_lorenz_series(const ht_sample* s, ht_series** out);
ht_status ht_zenga_series(const ht_sample* s, int rescale_endpoints, ht_series** out);
/* x = threshold, y = next/current ratio; rank_correlation optional. */
ht_status ht_spacing_series(const ht_sample* s, ht_series** out,
                            double* rank_correlation);
/* x = cv, y = skewness per bootstrap replicate; skipped optional. */
ht_status ht_bootstrap_series(const ht_sample* s, size_t replicates, uint64_t seed,
                              ht_series** out, size_t* skipped);

size_t ht_series_size(const ht_series* s);
const double* ht_series_x(const ht_series* s);
const double* ht_series_y(const ht_series* s);
void ht_series_free(ht_series* s);

/* ---- diagnostics ----------------------------------------------------- */

ht_status ht_moment_stats(const ht_sample* s, double* cv, double* skewness);

/* zone receives a static string; the flags are optional. */
ht_status ht_classify(double cv, double skewness, ht_formula_mode mode,
                      const char** zone, int* rule_of_thumb_override,
                      int* thin_tail_precheck);

typedef struct ht_verdict_config {
    double tail_fraction;
    double r2_min;
    size_t me_cut;
    double zenga_constant_range;
    double zenga_increasing_slope;
    double zenga_spearman_min;
    double zenga_rise_min;
    double zenga_trim_lo;
    double zenga_trim_hi;
    double aggregation_delta_max;
    ht_formula_mode formula_mode;
    uint64_t seed;
} ht_verdict_config;

void ht_verdict_config_init(ht_verdict_config* cfg);

/* Full four-plot verdict as a JSON document. */
ht_status ht_verdict_json(const ht_sample* s, const ht_verdict_config* cfg,
                          char** json_out);

ht_status ht_aggregation_stability(const ht_sample* s, uint64_t seed,
                                   const ht_verdict_config* cfg,
                                   double* slope_original, double* slope_aggregated,
                                   double* delta, int* applicable, int* pass);

/* ---- Monte Carlo power ------------------------------------------------ */

/* as_table = 0 emits JSON, anything else a fixed-width text table. */
ht_status ht_power_error_rates(const ht_model* truth, size_t n, size_t trials,
                               uint64_t seed, ht_formula_mode mode, unsigned threads,
                               int as_table, char** out);
ht_status ht_power_me(const ht_model* truth, size_t n, size_t trials, uint64_t seed,
                      unsigned threads, int as_table, char** out);

/* ---- figures (standalone SVG text) ------------------------------------ */

ht_status ht_figure_zipf_svg(const ht_sample* s, double bin_base, char** svg_out);
ht_status ht_figure_meplot_svg(const ht_sample* s, size_t cut, char** svg_out);
ht_status ht_figure_mrplot_svg(const ht_sample* s, ht_formula_mode mode,
                               size_t bootstrap, uint64_t seed, char** svg_out);
ht_status ht_figure_zenga_svg(const ht_sample* s, int rescale_endpoints,
                              char** svg_out);

/* Moment point + zone + optional bootstrap cloud as JSON (for mrplot). */
ht_status ht_moment_json(const ht_sample* s, ht_formula_mode mode, size_t bootstrap,
                         uint64_t seed, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HEAVYTAIL_H */
