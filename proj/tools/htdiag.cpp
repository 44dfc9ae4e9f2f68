// htdiag - command line front end for the heavytail diagnostics library.
// Links only the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heavytail.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

int fail(ht_status status) {
    std::cerr << "error: " << ht_last_error() << "\n";
    switch (status) {
    case HT_ERR_DATA:
        return 2;
    default:
        return 3;
    }
}

int fail_data(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

struct StringDeleter {
    void operator()(char* p) const { ht_string_free(p); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct SampleDeleter {
    void operator()(ht_sample* p) const { ht_sample_free(p); }
};
using SamplePtr = std::unique_ptr<ht_sample, SampleDeleter>;

struct ModelDeleter {
    void operator()(ht_model* p) const { ht_model_free(p); }
};
using ModelPtr = std::unique_ptr<ht_model, ModelDeleter>;

struct SeriesDeleter {
    void operator()(ht_series* p) const { ht_series_free(p); }
};
using SeriesPtr = std::unique_ptr<ht_series, SeriesDeleter>;

bool parse_double(const std::string& cell, double& out) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end != begin && *end == '\0';
}

// Comma-separated values, one header row auto-detected by a non-numeric
// first row, decimal point only.
struct Csv {
    std::vector<std::string> header; // empty when the first row is numeric
    std::vector<std::vector<std::string>> rows;
};

bool read_csv(const std::string& path, Csv& out, std::string& err) {
    std::ifstream in(path);
    if (!in) {
        err = "cannot open input file '" + path + "'";
        return false;
    }
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (cells.empty())
            continue;
        if (first) {
            first = false;
            double ignored;
            bool numeric = true;
            for (const auto& c : cells)
                if (!parse_double(c, ignored))
                    numeric = false;
            if (!numeric) {
                out.header = cells;
                continue;
            }
        }
        out.rows.push_back(std::move(cells));
    }
    return true;
}

// column: numeric string = 0-based index, otherwise a header name.
int load_column(const std::string& path, const std::string& column,
                std::vector<double>& values) {
    Csv csv;
    std::string err;
    if (!read_csv(path, csv, err))
        return fail_data(err);

    std::size_t index = 0;
    char* end = nullptr;
    const long parsed = std::strtol(column.c_str(), &end, 10);
    if (end != column.c_str() && *end == '\0' && parsed >= 0) {
        index = static_cast<std::size_t>(parsed);
    } else {
        bool found = false;
        for (std::size_t i = 0; i < csv.header.size(); ++i) {
            if (csv.header[i] == column) {
                index = i;
                found = true;
                break;
            }
        }
        if (!found)
            return fail_data("column '" + column + "' not found in header");
    }

    for (std::size_t r = 0; r < csv.rows.size(); ++r) {
        if (index >= csv.rows[r].size())
            return fail_data("row " + std::to_string(r + 1) + " has no column " +
                             std::to_string(index));
        double v;
        if (!parse_double(csv.rows[r][index], v))
            return fail_data("non-numeric value '" + csv.rows[r][index] + "' in column " +
                             std::to_string(index) + ", row " + std::to_string(r + 1));
        values.push_back(v);
    }
    if (values.empty())
        return fail_data("no usable observations");
    return 0;
}

int load_sample(const std::string& path, const std::string& column,
                std::optional<double> truncate, SamplePtr& out) {
    std::vector<double> values;
    if (int rc = load_column(path, column, values); rc != 0)
        return rc;
    ht_sample* raw = nullptr;
    std::size_t dropped = 0;
    if (ht_status st = ht_sample_create(values.data(), values.size(), &raw, &dropped);
        st != HT_OK)
        return fail(st);
    out.reset(raw);
    if (dropped > 0)
        std::cerr << "note: dropped " << dropped
                  << " non-positive or non-finite observation(s)\n";
    if (truncate) {
        ht_sample* cut = nullptr;
        if (ht_status st = ht_sample_truncate(out.get(), *truncate, &cut); st != HT_OK)
            return fail(st);
        out.reset(cut);
    }
    return 0;
}

int write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return 2;
    }
    f << text;
    return 0;
}

int write_series_csv(const std::string& path, const ht_series* series,
                     const std::string& xname, const std::string& yname) {
    std::ostringstream out;
    out << xname << ',' << yname << '\n';
    const double* x = ht_series_x(series);
    const double* y = ht_series_y(series);
    char buf[64];
    for (std::size_t i = 0; i < ht_series_size(series); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x[i], y[i]);
        out << buf;
    }
    return write_file(path, out.str());
}

int emit_json(const std::string& json, const std::string& json_path) {
    if (json_path.empty()) {
        std::cout << json << "\n";
        return 0;
    }
    return write_file(json_path, json + "\n");
}

// Shared model flags for synth/power.
struct ModelFlags {
    std::string model = "pareto1";
    double x0 = 1.0, alpha = 2.5;
    double b = 1.0;
    double xi = 0.5, beta = 1.0, nu = 0.0;
    double mu = 0.0, sigma = 1.0;
    double lambda = 1.0;
    double shape = 2.0, scale = 1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--model", model,
                        "pareto1|pareto2|gpd|lognormal|exponential|gamma")
            ->capture_default_str();
        cmd->add_option("--x0", x0, "pareto1 scale")->capture_default_str();
        cmd->add_option("--alpha", alpha, "pareto1/pareto2 shape")->capture_default_str();
        cmd->add_option("--b", b, "pareto2 scale")->capture_default_str();
        cmd->add_option("--xi", xi, "gpd shape")->capture_default_str();
        cmd->add_option("--beta", beta, "gpd scale")->capture_default_str();
        cmd->add_option("--nu", nu, "gpd location")->capture_default_str();
        cmd->add_option("--mu", mu, "lognormal log-mean")->capture_default_str();
        cmd->add_option("--sigma", sigma, "lognormal log-sd")->capture_default_str();
        cmd->add_option("--lambda", lambda, "exponential rate")->capture_default_str();
        cmd->add_option("--shape", shape, "gamma shape")->capture_default_str();
        cmd->add_option("--scale", scale, "gamma scale")->capture_default_str();
    }

    ht_status build(ModelPtr& out) const {
        ht_model* raw = nullptr;
        ht_status st;
        if (model == "pareto1")
            st = ht_model_pareto1(x0, alpha, &raw);
        else if (model == "pareto2")
            st = ht_model_pareto2(b, alpha, &raw);
        else if (model == "gpd")
            st = ht_model_gpd(xi, beta, nu, &raw);
        else if (model == "lognormal")
            st = ht_model_lognormal(mu, sigma, &raw);
        else if (model == "exponential")
            st = ht_model_exponential(lambda, &raw);
        else if (model == "gamma")
            st = ht_model_gamma(shape, scale, &raw);
        else {
            return HT_ERR_CONFIG;
        }
        out.reset(raw);
        return st;
    }
};

ht_formula_mode parse_mode(const std::string& mode) {
    return mode == "paper_verbatim" ? HT_FORMULA_PAPER_VERBATIM : HT_FORMULA_CORRECTED;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"heavy-tail diagnostics: Zipf, mean excess, moment-ratio and Zenga "
                 "plots with a combined verdict"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ht_version());

    // common data options
    struct DataArgs {
        std::string input;
        std::string column = "0";
        std::optional<double> truncate;
    };
    auto add_data_options = [](CLI::App* cmd, DataArgs& args) {
        cmd->add_option("-i,--input", args.input, "input CSV file")->required();
        cmd->add_option("-c,--column", args.column,
                        "column index (0-based) or header name")
            ->capture_default_str();
        cmd->add_option("--truncate", args.truncate,
                        "keep only observations strictly above this threshold");
    };

    // zipf
    auto* zipf = app.add_subcommand("zipf", "log-log survival plot");
    DataArgs zipf_data;
    add_data_options(zipf, zipf_data);
    double zipf_base = 0.0;
    std::string zipf_fig = "zipf.svg", zipf_csv = "zipf.csv";
    zipf->add_option("--bin-base", zipf_base, "logarithmic bin base (> 1 enables binning)");
    zipf->add_option("--fig", zipf_fig, "output SVG path")->capture_default_str();
    zipf->add_option("--series-out", zipf_csv, "output CSV path")->capture_default_str();

    // meplot
    auto* meplot = app.add_subcommand("meplot", "empirical mean excess plot");
    DataArgs me_data;
    add_data_options(meplot, me_data);
    std::size_t me_cut = 5;
    std::string me_fig = "meplot.svg", me_csv = "meplot.csv";
    meplot->add_option("--cut", me_cut, "drop this many of the largest thresholds")
        ->capture_default_str();
    meplot->add_option("--fig", me_fig, "output SVG path")->capture_default_str();
    meplot->add_option("--series-out", me_csv, "output CSV path")->capture_default_str();

    // mrplot
    auto* mrplot = app.add_subcommand("mrplot", "discriminant moment-ratio plot");
    DataArgs mr_data;
    add_data_options(mrplot, mr_data);
    std::size_t mr_bootstrap = 0;
    std::uint64_t mr_seed = kDefaultSeed;
    std::string mr_mode = "corrected";
    std::string mr_fig = "mrplot.svg", mr_json;
    mrplot->add_option("--bootstrap", mr_bootstrap, "bootstrap replicates for the cloud")
        ->capture_default_str();
    mrplot->add_option("--seed", mr_seed, "bootstrap seed")->capture_default_str();
    mrplot->add_option("--formula-mode", mr_mode, "corrected|paper_verbatim")
        ->capture_default_str();
    mrplot->add_option("--fig", mr_fig, "output SVG path")->capture_default_str();
    mrplot->add_option("--json-out", mr_json, "write JSON here instead of stdout");

    // zenga
    auto* zenga = app.add_subcommand("zenga", "Zenga concentration plot");
    DataArgs zenga_data;
    add_data_options(zenga, zenga_data);
    bool zenga_no_rescale = false;
    std::string zenga_fig = "zenga.svg", zenga_csv = "zenga.csv";
    zenga->add_flag("--no-rescale", zenga_no_rescale,
                    "keep the raw curve endpoints in the figure");
    zenga->add_option("--fig", zenga_fig, "output SVG path")->capture_default_str();
    zenga->add_option("--series-out", zenga_csv, "output CSV path")->capture_default_str();

    // classify
    auto* classify = app.add_subcommand("classify", "combined four-plot verdict (JSON)");
    DataArgs cls_data;
    add_data_options(classify, cls_data);
    ht_verdict_config cls_cfg;
    ht_verdict_config_init(&cls_cfg);
    std::string cls_mode = "corrected", cls_json;
    classify->add_option("--seed", cls_cfg.seed, "seed echoed into the report")
        ->capture_default_str();
    classify->add_option("--tail-fraction", cls_cfg.tail_fraction,
                         "fraction of points in the Zipf tail fit")
        ->capture_default_str();
    classify->add_option("--r2-min", cls_cfg.r2_min, "Zipf tail linearity gate")
        ->capture_default_str();
    classify->add_option("--cut", cls_cfg.me_cut, "mean excess threshold cut")
        ->capture_default_str();
    classify->add_option("--formula-mode", cls_mode, "corrected|paper_verbatim")
        ->capture_default_str();
    classify->add_option("--json-out", cls_json, "write JSON here instead of stdout");

    // power
    auto* power = app.add_subcommand("power", "Monte Carlo discrimination power");
    std::string power_diag = "zones";
    ModelFlags power_model;
    power_model.model = "";
    std::size_t power_n = 1000, power_trials = 1000;
    std::uint64_t power_seed = kDefaultSeed;
    std::string power_mode = "corrected";
    unsigned power_threads = 0;
    bool power_table = false;
    std::string power_json;
    power->add_option("--diagnostic", power_diag,
                      "zones (moment-ratio error rate) or me (mean excess concavity)")
        ->capture_default_str();
    power_model.attach(power);
    power->add_option("-n,--n", power_n, "sample size per trial")->capture_default_str();
    power->add_option("--trials", power_trials, "Monte Carlo trials")->capture_default_str();
    power->add_option("--seed", power_seed, "base seed (trial t uses seed+t)")
        ->capture_default_str();
    power->add_option("--formula-mode", power_mode, "corrected|paper_verbatim")
        ->capture_default_str();
    power->add_option("--threads", power_threads, "worker threads (0 = auto)")
        ->capture_default_str();
    power->add_flag("--table", power_table, "print a plain-text table instead of JSON");
    power->add_option("--json-out", power_json, "write JSON here instead of stdout");

    // synth
    auto* synth = app.add_subcommand("synth", "draw a seeded sample and write it as CSV");
    ModelFlags synth_model;
    std::size_t synth_n = 500;
    std::uint64_t synth_seed = kDefaultSeed;
    std::string synth_out = "sample.csv";
    synth_model.attach(synth);
    synth->add_option("-n,--n", synth_n, "sample size")->capture_default_str();
    synth->add_option("--seed", synth_seed, "seed")->capture_default_str();
    synth->add_option("-o,--out", synth_out, "output CSV path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help / --version
        app.exit(e);
        return 3;
    }

    if (zipf->parsed()) {
        SamplePtr s;
        if (int rc = load_sample(zipf_data.input, zipf_data.column, zipf_data.truncate, s))
            return rc;
        ht_series* series = nullptr;
        if (ht_status st = ht_zipf_series(s.get(), zipf_base, &series); st != HT_OK)
            return fail(st);
        SeriesPtr sp(series);
        CString svg;
        char* raw = nullptr;
        if (ht_status st = ht_figure_zipf_svg(s.get(), zipf_base, &raw); st != HT_OK)
            return fail(st);
        svg.reset(raw);
        if (int rc = write_file(zipf_fig, svg.get()))
            return rc;
        return write_series_csv(zipf_csv, sp.get(), "x", "survival");
    }

    if (meplot->parsed()) {
        SamplePtr s;
        if (int rc = load_sample(me_data.input, me_data.column, me_data.truncate, s))
            return rc;
        ht_series* series = nullptr;
        if (ht_status st = ht_mean_excess_series(s.get(), me_cut, &series); st != HT_OK)
            return fail(st);
        SeriesPtr sp(series);
        char* raw = nullptr;
        if (ht_status st = ht_figure_meplot_svg(s.get(), me_cut, &raw); st != HT_OK)
            return fail(st);
        CString svg(raw);
        if (int rc = write_file(me_fig, svg.get()))
            return rc;
        return write_series_csv(me_csv, sp.get(), "threshold", "mean_excess");
    }

    if (mrplot->parsed()) {
        SamplePtr s;
        if (int rc = load_sample(mr_data.input, mr_data.column, mr_data.truncate, s))
            return rc;
        const ht_formula_mode mode = parse_mode(mr_mode);
        char* raw = nullptr;
        if (ht_status st = ht_figure_mrplot_svg(s.get(), mode, mr_bootstrap, mr_seed, &raw);
            st != HT_OK)
            return fail(st);
        CString svg(raw);
        if (int rc = write_file(mr_fig, svg.get()))
            return rc;
        raw = nullptr;
        if (ht_status st = ht_moment_json(s.get(), mode, mr_bootstrap, mr_seed, &raw);
            st != HT_OK)
            return fail(st);
        CString json(raw);
        return emit_json(json.get(), mr_json);
    }

    if (zenga->parsed()) {
        SamplePtr s;
        if (int rc = load_sample(zenga_data.input, zenga_data.column, zenga_data.truncate, s))
            return rc;
        // figure defaults to rescaled endpoints, the CSV keeps the raw curve
        ht_series* series = nullptr;
        if (ht_status st = ht_zenga_series(s.get(), 0, &series); st != HT_OK)
            return fail(st);
        SeriesPtr sp(series);
        char* raw = nullptr;
        if (ht_status st = ht_figure_zenga_svg(s.get(), zenga_no_rescale ? 0 : 1, &raw);
            st != HT_OK)
            return fail(st);
        CString svg(raw);
        if (int rc = write_file(zenga_fig, svg.get()))
            return rc;
        return write_series_csv(zenga_csv, sp.get(), "u", "z");
    }

    if (classify->parsed()) {
        SamplePtr s;
        if (int rc = load_sample(cls_data.input, cls_data.column, cls_data.truncate, s))
            return rc;
        cls_cfg.formula_mode = parse_mode(cls_mode);
        char* raw = nullptr;
        if (ht_status st = ht_verdict_json(s.get(), &cls_cfg, &raw); st != HT_OK)
            return fail(st);
        CString json(raw);
        return emit_json(json.get(), cls_json);
    }

    if (power->parsed()) {
        if (power_model.model.empty())
            power_model.model = (power_diag == "me") ? "lognormal" : "pareto1";
        if (power_model.model == "pareto1" && power_diag != "me" &&
            power->count("--alpha") == 0)
            power_model.alpha = 5.0; // default study configuration
        ModelPtr model;
        if (ht_status st = power_model.build(model); st != HT_OK) {
            std::cerr << "error: unknown model '" << power_model.model << "'\n";
            return 3;
        }
        char* raw = nullptr;
        ht_status st;
        const int as_table = power_table ? 1 : 0;
        if (power_diag == "zones") {
            st = ht_power_error_rates(model.get(), power_n, power_trials, power_seed,
                                      parse_mode(power_mode), power_threads, as_table, &raw);
        } else if (power_diag == "me") {
            st = ht_power_me(model.get(), power_n, power_trials, power_seed,
                             power_threads, as_table, &raw);
        } else {
            std::cerr << "error: unknown diagnostic '" << power_diag << "'\n";
            return 3;
        }
        if (st != HT_OK)
            return fail(st);
        CString text(raw);
        if (power_table) {
            std::cout << text.get();
            return 0;
        }
        return emit_json(text.get(), power_json);
    }

    if (synth->parsed()) {
        ModelPtr model;
        if (ht_status st = synth_model.build(model); st != HT_OK) {
            if (st == HT_ERR_CONFIG) {
                std::cerr << "error: unknown model '" << synth_model.model << "'\n";
                return 3;
            }
            return fail(st);
        }
        ht_sample* raw = nullptr;
        if (ht_status st = ht_model_draw(model.get(), synth_n, synth_seed, &raw);
            st != HT_OK)
            return fail(st);
        SamplePtr s(raw);
        std::ostringstream out;
        out << "value\n";
        char buf[64];
        const double* v = ht_sample_values(s.get());
        for (std::size_t i = 0; i < ht_sample_size(s.get()); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g\n", v[i]);
            out << buf;
        }
        return write_file(synth_out, out.str());
    }

    return 3;
}
