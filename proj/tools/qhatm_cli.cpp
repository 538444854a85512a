// Command-line front end: JSON config + flag overrides, CSV/JSON emission.
// Exit codes: 0 ok, 2 config error, 3 runtime (solver) error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhatm/analysis.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string model = "mb";
    double omega = 0.005;
    double ell = 0.1;
    double c = 10.0;
    double a = 1.0;  // wbk only
    double b = 0.0;  // wbk only
    double alpha = 1.0;
    double hbar = -1.0;
    int n = 1;
    int order = 3;
    double x_min = 0.0;
    double x_max = 1.0;
    int n_interior = 257;
    int stencil_stride = 0;  // 0 = auto
    bool a_set = false, b_set = false;
};

// Shortest decimal representation that round-trips the double.
std::string fmt(double v) {
    char buf[40];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;   // preformatted cells
    std::vector<std::vector<double>> row_values;  // same shape, for JSON out
};

void push_row(Table& t, const std::vector<double>& vals) {
    std::vector<std::string> cells;
    cells.reserve(vals.size());
    for (double v : vals) cells.push_back(fmt(v));
    t.rows.push_back(std::move(cells));
    t.row_values.push_back(vals);
}

void write_csv(const Table& t, const std::string& path) {
    std::ostringstream out;
    out << "# schema: ";
    for (size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
    if (path.empty() || path == "-") {
        std::cout << out.str();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << out.str();
}

void write_json(const Table& t, const std::string& path) {
    if (path.empty()) return;
    ordered_json rows = ordered_json::array();
    for (const auto& vals : t.row_values) {
        ordered_json row;
        for (size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = vals[i];
        rows.push_back(std::move(row));
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << rows.dump(2) << "\n";
}

// Applies a JSON config file under flags > file > defaults precedence:
// a key only lands when its flag was not given on the command line.
void apply_config_file(RunConfig& cfg, const std::string& path, const CLI::App& cmd) {
    std::ifstream f(path);
    if (!f) throw ConfigError("config: cannot open file: " + path);
    ordered_json doc;
    try {
        doc = ordered_json::parse(f);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: top level must be a JSON object");

    auto flag_given = [&cmd](const std::string& flag) {
        return cmd.count("--" + flag) > 0;
    };
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "model") {
                if (!flag_given("model")) cfg.model = value.get<std::string>();
            } else if (key == "omega") {
                if (!flag_given("omega")) cfg.omega = value.get<double>();
            } else if (key == "ell") {
                if (!flag_given("ell")) cfg.ell = value.get<double>();
            } else if (key == "c") {
                if (!flag_given("c")) cfg.c = value.get<double>();
            } else if (key == "a") {
                if (!flag_given("a")) { cfg.a = value.get<double>(); cfg.a_set = true; }
            } else if (key == "b") {
                if (!flag_given("b")) { cfg.b = value.get<double>(); cfg.b_set = true; }
            } else if (key == "alpha") {
                if (!flag_given("alpha")) cfg.alpha = value.get<double>();
            } else if (key == "hbar") {
                if (!flag_given("hbar")) cfg.hbar = value.get<double>();
            } else if (key == "n") {
                if (!flag_given("n")) cfg.n = value.get<int>();
            } else if (key == "order") {
                if (!flag_given("order")) cfg.order = value.get<int>();
            } else if (key == "x_min") {
                if (!flag_given("x-min")) cfg.x_min = value.get<double>();
            } else if (key == "x_max") {
                if (!flag_given("x-max")) cfg.x_max = value.get<double>();
            } else if (key == "n_interior") {
                if (!flag_given("n-interior")) cfg.n_interior = value.get<int>();
            } else if (key == "stencil_stride") {
                if (!flag_given("stencil-stride")) cfg.stencil_stride = value.get<int>();
            } else {
                throw ConfigError("config: unknown key \"" + key + "\"");
            }
        } catch (const ordered_json::exception& e) {
            throw ConfigError("config: bad value for \"" + key + "\": " + e.what());
        }
    }
}

qhatm::ModelSpec make_model(const RunConfig& cfg) {
    if (cfg.model == "mb") {
        if (cfg.a_set || cfg.b_set)
            throw ConfigError("config: a/b overrides apply to model \"wbk\" only");
        return qhatm::mb_model(cfg.omega, cfg.ell, cfg.c);
    }
    if (cfg.model == "alw") {
        if (cfg.a_set || cfg.b_set)
            throw ConfigError("config: a/b overrides apply to model \"wbk\" only");
        return qhatm::alw_model(cfg.omega, cfg.ell, cfg.c);
    }
    if (cfg.model == "wbk")
        return qhatm::wbk_model(cfg.a, cfg.b, cfg.omega, cfg.ell, cfg.c);
    throw ConfigError("config: model must be one of mb, alw, wbk (got \"" + cfg.model +
                      "\")");
}

qhatm::QhatmParams make_params(const RunConfig& cfg, const qhatm::ModelSpec& model) {
    qhatm::QhatmParams p;
    p.alpha = cfg.alpha;
    p.hbar = cfg.hbar;
    p.n = cfg.n;
    p.order = cfg.order;
    if (cfg.n_interior < 2)
        throw ConfigError("config: n_interior must be >= 2");
    p.grid = qhatm::default_grid(model, cfg.order, cfg.x_min, cfg.x_max, cfg.n_interior);
    if (cfg.stencil_stride != 0) {
        p.grid.stencil_stride = cfg.stencil_stride;
        p.grid.halo = qhatm::chain_half_width(model) * (cfg.order + 1) * p.grid.stride();
    }
    p.validate();
    return p;
}

// Adds the shared model/solver/grid flags to a subcommand, bound to cfg.
void add_common_flags(CLI::App& cmd, RunConfig& cfg, std::string& config_path,
                      std::string& out_path, std::string& json_path) {
    cmd.add_option("--config", config_path, "JSON config file");
    cmd.add_option("--model", cfg.model, "model preset: mb, alw or wbk");
    cmd.add_option("--omega", cfg.omega, "wave speed");
    cmd.add_option("--ell", cfg.ell, "wavenumber constant");
    cmd.add_option("--c", cfg.c, "phase shift");
    cmd.add_option("--a", cfg.a, "dispersion coefficient (wbk model only)");
    cmd.add_option("--b", cfg.b, "diffusion coefficient (wbk model only)");
    cmd.add_option("--alpha", cfg.alpha, "fractional order in (0, 1]");
    cmd.add_option("--hbar", cfg.hbar, "convergence-control parameter");
    cmd.add_option("--n", cfg.n, "asymptotic parameter, n >= 1");
    cmd.add_option("--order", cfg.order, "truncation order M");
    cmd.add_option("--x-min", cfg.x_min, "interior domain start");
    cmd.add_option("--x-max", cfg.x_max, "interior domain end");
    cmd.add_option("--n-interior", cfg.n_interior, "interior node count");
    cmd.add_option("--stencil-stride", cfg.stencil_stride,
                   "finite-difference stencil stride (0 = auto)");
    cmd.add_option("--out", out_path, "CSV output path (default stdout)");
    cmd.add_option("--json-out", json_path, "optional JSON output mirroring the rows");
}

int run_solve(const RunConfig& cfg, const std::vector<double>& times,
              const std::string& out_path, const std::string& json_path) {
    auto model = make_model(cfg);
    auto params = make_params(cfg, model);
    auto [u, v] = qhatm::assemble(qhatm::qhatm_solve(model, params));
    Table t;
    t.columns = {"t", "x", "u", "v"};
    for (double tt : times) {
        if (tt < 0.0) throw ConfigError("config: t must be >= 0");
        for (int j = 0; j < params.grid.n_interior; ++j) {
            size_t i = static_cast<size_t>(params.grid.halo + j);
            push_row(t, {tt, params.grid.x_at(static_cast<int>(i)),
                         qhatm::series_eval(u.values[i], tt, params.alpha),
                         qhatm::series_eval(v.values[i], tt, params.alpha)});
        }
    }
    write_csv(t, out_path);
    write_json(t, json_path);
    return 0;
}

int run_table(RunConfig cfg, const std::string& preset_name, const CLI::App& cmd,
              const std::string& out_path, const std::string& json_path) {
    qhatm::TablePreset preset;
    try {
        preset = qhatm::table_preset_from_name(preset_name);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    const auto& ref = qhatm::table_reference(preset);
    if (cmd.count("--model") == 0) cfg.model = ref.model_name;
    auto model = make_model(cfg);
    auto params = make_params(cfg, model);
    if (params.alpha != 1.0)
        throw ConfigError("config: table presets require alpha = 1");

    std::vector<std::pair<double, double>> points;
    for (const auto& row : ref.rows) points.emplace_back(row.t, row.x);
    auto errs = qhatm::error_table(model, params, points);

    Table t;
    std::string err_col = std::string("computed_abs_err_") + ref.unknown;
    t.columns = {"t", "x", err_col, "reference_qhatm"};
    for (const auto& name : ref.baseline_names) t.columns.push_back("reference_" + name);
    for (size_t r = 0; r < ref.rows.size(); ++r) {
        double computed = ref.unknown == 'u' ? errs.rows[r].abs_err_u : errs.rows[r].abs_err_v;
        std::vector<double> vals = {ref.rows[r].t, ref.rows[r].x, computed,
                                    ref.rows[r].qhatm};
        for (double bl : ref.rows[r].baselines) vals.push_back(bl);
        push_row(t, vals);
    }
    write_csv(t, out_path);
    write_json(t, json_path);
    return 0;
}

int run_hcurve(const RunConfig& cfg, double lo, double hi, int count, double x, double tt,
               const std::string& out_path, const std::string& json_path) {
    auto model = make_model(cfg);
    auto params = make_params(cfg, model);
    if (count < 1) throw ConfigError("config: count must be >= 1");
    auto curve = qhatm::hcurve(model, params, lo, hi, count, x, tt);
    Table t;
    t.columns = {"hbar", "u", "v"};
    for (const auto& p : curve) push_row(t, {p.hbar, p.u, p.v});
    write_csv(t, out_path);
    write_json(t, json_path);
    return 0;
}

int run_alpha_sweep(const RunConfig& cfg, const std::vector<double>& alphas, double x,
                    double t_min, double t_max, int count, const std::string& out_path,
                    const std::string& json_path) {
    auto model = make_model(cfg);
    auto params = make_params(cfg, model);
    if (alphas.empty()) throw ConfigError("config: alphas must be non-empty");
    if (count < 1) throw ConfigError("config: count must be >= 1");
    auto sweep = qhatm::alpha_sweep(model, params, alphas, x, t_min, t_max, count);
    Table t;
    t.columns = {"alpha", "t", "u", "v"};
    for (const auto& series : sweep)
        for (size_t k = 0; k < series.t.size(); ++k)
            push_row(t, {series.alpha, series.t[k], series.u[k], series.v[k]});
    write_csv(t, out_path);
    write_json(t, json_path);
    return 0;
}

int run_residual(const RunConfig& cfg, double tt, const std::string& out_path,
                 const std::string& json_path) {
    auto model = make_model(cfg);
    auto params = make_params(cfg, model);
    auto res = qhatm::residual(qhatm::qhatm_solve(model, params), tt);
    Table t;
    t.columns = {"x", "r_u", "r_v"};
    for (size_t i = 0; i < res.x.size(); ++i)
        push_row(t, {res.x[i], res.r_u[i], res.r_v[i]});
    write_csv(t, out_path);
    write_json(t, json_path);
    return 0;
}

int run_convergence(const RunConfig& cfg, double tt, const std::string& out_path,
                    const std::string& json_path) {
    auto model = make_model(cfg);
    auto params = make_params(cfg, model);
    auto report = qhatm::convergence_report(qhatm::qhatm_solve(model, params), tt);
    Table t;
    t.columns = {"i", "rho_u", "rho_v", "tail_u", "bound_u", "tail_v", "bound_v",
                 "applicable"};
    double nan = std::numeric_limits<double>::quiet_NaN();
    for (size_t i = 0; i < report.rho_u.size(); ++i) {
        double ru = report.rho_u[i] ? *report.rho_u[i] : nan;
        double rv = report.rho_v[i] ? *report.rho_v[i] : nan;
        bool have_bound = i < report.bounds.size();
        const auto* b = have_bound ? &report.bounds[i] : nullptr;
        push_row(t, {static_cast<double>(i), ru, rv, b ? b->tail_u : nan,
                     b ? b->bound_u : nan, b ? b->tail_v : nan, b ? b->bound_v : nan,
                     b ? (b->applicable ? 1.0 : 0.0) : nan});
    }
    write_csv(t, out_path);
    write_json(t, json_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-HATM series solver for coupled shallow-water systems"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path, out_path, json_path;

    auto* solve = app.add_subcommand("solve", "assembled u, v on the interior grid");
    std::vector<double> times = {0.1};
    add_common_flags(*solve, cfg, config_path, out_path, json_path);
    solve->add_option("--t", times, "evaluation times (repeatable)");

    auto* table = app.add_subcommand("table", "absolute-error comparison table");
    std::string preset_name;
    add_common_flags(*table, cfg, config_path, out_path, json_path);
    table->add_option("--preset", preset_name, "table1, table2, table3 or table4")
        ->required();

    auto* hc = app.add_subcommand("hcurve", "solution value along an hbar sweep");
    double h_lo = -2.0, h_hi = 0.5;
    int h_count = 101;
    double probe_x = 0.5, probe_t = 0.01;
    add_common_flags(*hc, cfg, config_path, out_path, json_path);
    hc->add_option("--hbar-min", h_lo, "sweep start");
    hc->add_option("--hbar-max", h_hi, "sweep end");
    hc->add_option("--count", h_count, "sample count");
    hc->add_option("--x", probe_x, "probe coordinate");
    hc->add_option("--t", probe_t, "probe time");

    auto* sweep = app.add_subcommand("alpha-sweep", "u, v over time per alpha");
    std::vector<double> alphas = {1.0, 0.75, 0.5};
    double t_min = 0.0, t_max = 0.5;
    int t_count = 51;
    add_common_flags(*sweep, cfg, config_path, out_path, json_path);
    sweep->add_option("--alphas", alphas, "fractional orders (repeatable)");
    sweep->add_option("--x", probe_x, "probe coordinate");
    sweep->add_option("--t-min", t_min, "time range start");
    sweep->add_option("--t-max", t_max, "time range end");
    sweep->add_option("--count", t_count, "samples along the time range");

    auto* resid = app.add_subcommand("residual", "governing-equation residual at t");
    double resid_t = 0.1;
    add_common_flags(*resid, cfg, config_path, out_path, json_path);
    resid->add_option("--t", resid_t, "evaluation time");

    auto* conv = app.add_subcommand("convergence", "iterate ratios and tail bounds");
    double conv_t = 0.5;
    add_common_flags(*conv, cfg, config_path, out_path, json_path);
    conv->add_option("--t", conv_t, "norm evaluation time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    CLI::App* cmd = app.get_subcommands().front();
    try {
        if (!config_path.empty()) apply_config_file(cfg, config_path, *cmd);
        if (cmd->count("--a") > 0) cfg.a_set = true;
        if (cmd->count("--b") > 0) cfg.b_set = true;
        if (cmd == solve) return run_solve(cfg, times, out_path, json_path);
        if (cmd == table) return run_table(cfg, preset_name, *cmd, out_path, json_path);
        if (cmd == hc)
            return run_hcurve(cfg, h_lo, h_hi, h_count, probe_x, probe_t, out_path,
                              json_path);
        if (cmd == sweep)
            return run_alpha_sweep(cfg, alphas, probe_x, t_min, t_max, t_count, out_path,
                                   json_path);
        if (cmd == resid) return run_residual(cfg, resid_t, out_path, json_path);
        if (cmd == conv) return run_convergence(cfg, conv_t, out_path, json_path);
        std::cerr << "error: unknown subcommand\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
