// Command-line front end: time series of entropy / variance squeezing factors
// for a qubit resonantly coupled to a single-mode Schrodinger cat field.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catjc/emit.hpp"
#include "catjc/scenario.hpp"

namespace {

using namespace catjc;
using std::numbers::pi;

// Exit codes shared with the test suite and documented in the README.
constexpr int kExitOk = 0;
constexpr int kExitInvalidParams = 1;
constexpr int kExitInvariantViolation = 2;
constexpr int kExitEngineDisagreement = 3;
constexpr int kExitIoFailure = 4;

struct CliValues {
    double nbar = 0, beta = 0, rhoc = 0, theta = 0, phi = 0;
    double tau_start = 0, tau_end = 0, tail_eps = 0, threshold = 0;
    int points = 0;
    std::string engine, format, out, config_path, preset;
    std::vector<double> list; // --thetas / --nbars / --rhocs

    CLI::Option* o_nbar = nullptr;
    CLI::Option* o_beta = nullptr;
    CLI::Option* o_rhoc = nullptr;
    CLI::Option* o_theta = nullptr;
    CLI::Option* o_phi = nullptr;
    CLI::Option* o_tau_start = nullptr;
    CLI::Option* o_tau_end = nullptr;
    CLI::Option* o_points = nullptr;
    CLI::Option* o_tail_eps = nullptr;
    CLI::Option* o_threshold = nullptr;
    CLI::Option* o_engine = nullptr;
    CLI::Option* o_format = nullptr;
    CLI::Option* o_out = nullptr;
    CLI::Option* o_preset = nullptr;
};

void add_common_options(CLI::App* cmd, CliValues& v) {
    v.o_nbar = cmd->add_option("--nbar", v.nbar, "mean photon number of each coherent branch");
    v.o_beta = cmd->add_option("--beta", v.beta, "coherent phase beta (radians)");
    v.o_rhoc = cmd->add_option("--rhoc", v.rhoc, "relative phase rho_c between the branches (radians)");
    v.o_theta = cmd->add_option("--theta", v.theta, "qubit polar angle theta in [0, pi]");
    v.o_phi = cmd->add_option("--phi", v.phi, "qubit relative phase phi (radians)");
    v.o_tau_start = cmd->add_option("--tau-start", v.tau_start, "first scaled time of the grid");
    v.o_tau_end = cmd->add_option("--tau-end", v.tau_end, "last scaled time of the grid");
    v.o_points = cmd->add_option("--points", v.points,
                                 "grid points (0 = default density of 100 per unit tau)");
    v.o_engine = cmd->add_option("--engine", v.engine, "oracle | closed_form | both");
    v.o_tail_eps = cmd->add_option("--tail-eps", v.tail_eps,
                                   "Poisson tail bound for the Fock truncation");
    v.o_threshold = cmd->add_option("--threshold", v.threshold,
                                    "engine agreement gate for --engine both / validate");
    v.o_out = cmd->add_option("--out", v.out, "output file path");
    v.o_format = cmd->add_option("--format", v.format, "csv | json");
    v.o_preset = cmd->add_option(
        "--preset", v.preset,
        "named parameter regime (fig1_caption, fig1_text, fig2, fig3a..fig3e, fig4a..fig4d)");
    cmd->add_option("--config", v.config_path,
                    "flat key=value config file ('#' comments); command-line flags override it");
}

double parse_double(const std::string& key, const std::string& text) {
    size_t pos = 0;
    double value = 0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw InvalidParameterError("config: bad number for '" + key + "': " + text);
    }
    if (pos != text.size())
        throw InvalidParameterError("config: trailing junk in '" + key + "': " + text);
    return value;
}

int parse_int(const std::string& key, const std::string& text) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw InvalidParameterError("config: bad integer for '" + key + "': " + text);
    }
    if (pos != text.size())
        throw InvalidParameterError("config: trailing junk in '" + key + "': " + text);
    return value;
}

std::string trim(const std::string& s) {
    const size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// One `key = value` pair per line; blank lines and '#' comments are ignored.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw InvalidParameterError("config: line " + std::to_string(lineno) +
                                        " is not key=value: " + t);
        kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return kv;
}

void apply_config_pair(ScenarioConfig& c, const std::string& key, const std::string& value) {
    if (key == "nbar") c.field.n_bar = parse_double(key, value);
    else if (key == "beta") c.field.beta = parse_double(key, value);
    else if (key == "rhoc") c.field.rho_c = parse_double(key, value);
    else if (key == "theta") c.qubit.theta = parse_double(key, value);
    else if (key == "phi") c.qubit.phi = parse_double(key, value);
    else if (key == "tau_start") c.tau_start = parse_double(key, value);
    else if (key == "tau_end") c.tau_end = parse_double(key, value);
    else if (key == "points") c.n_points = parse_int(key, value);
    else if (key == "engine") c.engine = engine_from_string(value);
    else if (key == "tail_eps") c.tail_eps = parse_double(key, value);
    else if (key == "threshold") c.threshold = parse_double(key, value);
    else if (key == "out") c.output_path = value;
    else if (key == "format") c.output_format = format_from_string(value);
    else throw InvalidParameterError("config: unknown key '" + key + "'");
}

// Precedence: built-in defaults < preset < config file < command-line flags.
ScenarioConfig merge_config(const CliValues& v) {
    std::map<std::string, std::string> file_kv;
    if (!v.config_path.empty()) file_kv = read_config_file(v.config_path);

    std::string preset_name = v.preset;
    if (preset_name.empty()) {
        auto it = file_kv.find("preset");
        if (it != file_kv.end()) preset_name = it->second;
    }

    ScenarioConfig c;
    if (!preset_name.empty()) {
        const Preset* p = find_preset(preset_name);
        if (!p) throw InvalidParameterError("unknown preset '" + preset_name + "'");
        c = p->config;
    }
    for (const auto& [key, value] : file_kv) {
        if (key == "preset") continue;
        apply_config_pair(c, key, value);
    }
    if (v.o_nbar->count()) c.field.n_bar = v.nbar;
    if (v.o_beta->count()) c.field.beta = v.beta;
    if (v.o_rhoc->count()) c.field.rho_c = v.rhoc;
    if (v.o_theta->count()) c.qubit.theta = v.theta;
    if (v.o_phi->count()) c.qubit.phi = v.phi;
    if (v.o_tau_start->count()) c.tau_start = v.tau_start;
    if (v.o_tau_end->count()) c.tau_end = v.tau_end;
    if (v.o_points->count()) c.n_points = v.points;
    if (v.o_engine->count()) c.engine = engine_from_string(v.engine);
    if (v.o_tail_eps->count()) c.tail_eps = v.tail_eps;
    if (v.o_threshold->count()) c.threshold = v.threshold;
    if (v.o_out->count()) c.output_path = v.out;
    if (v.o_format->count()) c.output_format = format_from_string(v.format);
    return c;
}

std::filesystem::path with_suffix(const std::filesystem::path& base, const std::string& tag) {
    std::filesystem::path p = base;
    const std::string ext = p.extension().string();
    p.replace_extension("");
    p += tag;
    p += ext;
    return p;
}

std::string compact_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void require_out(const ScenarioConfig& c) {
    if (c.output_path.empty())
        throw InvalidParameterError("--out is required (or set out= in the config file)");
}

// Emits the primary series, and for engine=both also the forensic closed-form
// sibling plus the validation verdict. Returns the exit code contribution.
int emit_series(const TimeSeries& series, const std::filesystem::path& path) {
    emit(series, path, series.config.output_format);
    std::cout << "wrote " << path.string() << "\n";
    if (series.config.engine != Engine::both) return kExitOk;

    TimeSeries forensic;
    forensic.config = series.config;
    forensic.config.engine = Engine::closed_form;
    forensic.samples = series.closed_form_samples;
    const std::filesystem::path twin = with_suffix(path, ".closed_form");
    emit(forensic, twin, series.config.output_format);
    std::cout << "wrote " << twin.string() << "\n";
    std::cout << series.validation->summary();
    return series.validation->consistent ? kExitOk : kExitEngineDisagreement;
}

int cmd_simulate(const CliValues& v) {
    ScenarioConfig c = merge_config(v);
    require_out(c);
    const TimeSeries series = run_time_series(c);
    return emit_series(series, c.output_path);
}

int cmd_sweep(const CliValues& v, bool over_theta) {
    ScenarioConfig base = merge_config(v);
    require_out(base);
    std::vector<double> values = v.list;
    if (values.empty()) {
        values = over_theta ? std::vector<double>{0.0, pi / 6, pi / 3, 5 * pi / 6, pi}
                            : std::vector<double>{15.0, 5.0, 0.5, 0.05};
    }
    const std::vector<TimeSeries> series =
        over_theta ? run_theta_sweep(base, values) : run_nbar_sweep(base, values);
    int rc = kExitOk;
    for (size_t i = 0; i < series.size(); ++i) {
        const std::string tag =
            std::string(over_theta ? "_theta" : "_nbar") + compact_num(values[i]);
        const int member_rc = emit_series(series[i], with_suffix(base.output_path, tag));
        if (member_rc != kExitOk) rc = member_rc;
    }
    return rc;
}

int cmd_compare_rhoc(const CliValues& v) {
    ScenarioConfig base = merge_config(v);
    std::vector<double> values = v.list;
    if (values.empty()) values = {0.0, pi / 6};
    const std::vector<RhoCDeviationRow> rows = run_rho_c_compare(base, values);
    std::printf("%-22s %-22s %-22s\n", "rho_c", "max|dE_x|", "max|dE_y|");
    for (const RhoCDeviationRow& r : rows)
        std::printf("%-22.15g %-22.15g %-22.15g\n", r.rho_c, r.max_dev_e_x, r.max_dev_e_y);
    if (!base.output_path.empty()) {
        emit_rho_c_table(rows, base.output_path, base.output_format);
        std::cout << "wrote " << base.output_path << "\n";
    }
    return kExitOk;
}

int cmd_validate(const CliValues& v) {
    ScenarioConfig c = merge_config(v);
    c.validate();
    const int n_max = choose_truncation(c.field.n_bar, c.tail_eps);
    const std::vector<double> taus = c.tau_grid();
    const ValidationReport report =
        compare_engines(c.qubit, c.field, taus, n_max, c.threshold);
    std::cout << report.summary();
    return report.consistent ? kExitOk : kExitEngineDisagreement;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy and variance squeezing of a qubit resonantly coupled to a "
                 "single-mode Schrodinger cat field"};
    app.require_subcommand(1);

    CliValues vs, vt, vn, vr, vv;
    CLI::App* simulate = app.add_subcommand("simulate", "one squeezing time series");
    add_common_options(simulate, vs);
    CLI::App* sweep_theta =
        app.add_subcommand("sweep-theta", "one series per qubit angle theta");
    add_common_options(sweep_theta, vt);
    sweep_theta->add_option("--thetas", vt.list, "comma-separated theta values")
        ->delimiter(',');
    CLI::App* sweep_nbar =
        app.add_subcommand("sweep-nbar", "one series per mean photon number");
    add_common_options(sweep_nbar, vn);
    sweep_nbar->add_option("--nbars", vn.list, "comma-separated n_bar values")->delimiter(',');
    CLI::App* compare_rhoc = app.add_subcommand(
        "compare-rhoc", "deviation of squeezing factors from the rho_c = 0 cat");
    add_common_options(compare_rhoc, vr);
    compare_rhoc->add_option("--rhocs", vr.list, "comma-separated rho_c values")
        ->delimiter(',');
    CLI::App* validate =
        app.add_subcommand("validate", "cross-validate the two engines over the grid");
    add_common_options(validate, vv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(vs);
        if (sweep_theta->parsed()) return cmd_sweep(vt, true);
        if (sweep_nbar->parsed()) return cmd_sweep(vn, false);
        if (compare_rhoc->parsed()) return cmd_compare_rhoc(vr);
        if (validate->parsed()) return cmd_validate(vv);
    } catch (const InvalidParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const CorruptStateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const InvariantViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoFailure;
    }
    return kExitOk;
}
