#include "heavytail/json_out.hpp"

#include <cstdio>

#include "json.hpp"

namespace heavytail {

using nlohmann::json;

namespace {

json config_json(const VerdictConfig& cfg) {
    return json{{"tail_fraction", cfg.tail_fraction},
                {"r2_min", cfg.r2_min},
                {"me_cut", cfg.me_cut},
                {"zenga_constant_range", cfg.zenga.constant_range},
                {"zenga_increasing_slope", cfg.zenga.increasing_slope},
                {"zenga_spearman_min", cfg.zenga.spearman_min},
                {"zenga_rise_min", cfg.zenga.rise_min},
                {"zenga_trim", json::array({cfg.zenga.trim_lo, cfg.zenga.trim_hi})},
                {"aggregation_delta_max", cfg.aggregation_delta_max},
                {"formula_mode", formula_mode_name(cfg.formula_mode)}};
}

json zone_json(const MomentPoint& pt, const ZoneResult& zone) {
    return json{{"cv", pt.cv},
                {"skewness", pt.skewness},
                {"zone", zone_name(zone.zone)},
                {"rule_of_thumb_override", zone.rule_of_thumb_override},
                {"thin_tail_precheck", zone.thin_tail_precheck}};
}

} // namespace

std::string verdict_json(const Verdict& v, const VerdictConfig& cfg, std::size_t n,
                         std::uint64_t seed) {
    json doc{{"schema", 1},
             {"label", verdict_label_name(v.label)},
             {"n", n},
             {"seed", seed},
             {"zipf_tail",
              {{"pass", v.zipf_tail.pass},
               {"slope", v.zipf_tail.slope},
               {"r2", v.zipf_tail.r2},
               {"points", v.zipf_tail.points}}},
             {"mean_excess_trend", {{"pass", v.me.pass}, {"slope", v.me.slope}}},
             {"moment_zone", zone_json(v.point, v.zone)},
             {"zenga_shape", zenga_shape_name(v.zenga)},
             {"config", config_json(cfg)}};
    return doc.dump(2);
}

std::string moment_json(const MomentPoint& pt, const ZoneResult& zone, FormulaMode mode,
                        std::size_t n, const BootstrapMoments* bootstrap,
                        std::uint64_t seed) {
    json doc{{"schema", 1},
             {"n", n},
             {"seed", seed},
             {"formula_mode", formula_mode_name(mode)},
             {"moment_zone", zone_json(pt, zone)}};
    if (bootstrap) {
        json points = json::array();
        for (const MomentPoint& p : bootstrap->points) {
            const ZoneResult zr = classify_moment_point(p, mode);
            points.push_back(json{{"cv", p.cv},
                                  {"skewness", p.skewness},
                                  {"zone", zone_name(zr.zone)}});
        }
        doc["bootstrap"] = json{{"replicates", bootstrap->points.size() + bootstrap->skipped},
                                {"skipped", bootstrap->skipped},
                                {"points", std::move(points)}};
    }
    return doc.dump(2);
}

std::string power_report_json(const PowerReport& rep) {
    json doc{{"schema", 1},
             {"report", "classification_error_rates"},
             {"model", rep.model},
             {"n", rep.n},
             {"trials", rep.trials},
             {"errors", rep.errors},
             {"skipped", rep.skipped},
             {"error_rate", rep.error_rate},
             {"ci_halfwidth", rep.ci_halfwidth},
             {"seed", rep.seed},
             {"formula_mode", formula_mode_name(rep.formula_mode)}};
    return doc.dump(2);
}

std::string me_power_json(const MePowerReport& rep) {
    json doc{{"schema", 1},
             {"report", "me_discrimination_power"},
             {"model", rep.model},
             {"n", rep.n},
             {"trials", rep.trials},
             {"distinguished", rep.distinguished},
             {"fraction", rep.fraction},
             {"seed", rep.seed}};
    return doc.dump(2);
}

std::string power_report_table(const PowerReport& rep) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "%-28s %8s %8s %8s %8s %12s %12s\n"
                  "%-28s %8zu %8zu %8zu %8zu %12.4f %12.4f\n",
                  "model", "n", "trials", "errors", "skipped", "error_rate", "ci95",
                  rep.model.c_str(), rep.n, rep.trials, rep.errors, rep.skipped,
                  rep.error_rate, rep.ci_halfwidth);
    return buf;
}

std::string me_power_table(const MePowerReport& rep) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "%-28s %8s %8s %14s %10s\n"
                  "%-28s %8zu %8zu %14zu %10.4f\n",
                  "model", "n", "trials", "distinguished", "fraction",
                  rep.model.c_str(), rep.n, rep.trials, rep.distinguished, rep.fraction);
    return buf;
}

} // namespace heavytail
