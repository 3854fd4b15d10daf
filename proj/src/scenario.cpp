#include "catjc/scenario.hpp"

#include <cmath>
#include <limits>
#include <tuple>
#include <numbers>

namespace catjc {

const char* to_string(Engine e) {
    switch (e) {
        case Engine::oracle: return "oracle";
        case Engine::closed_form: return "closed_form";
        case Engine::both: return "both";
    }
    return "?";
}

const char* to_string(OutputFormat f) {
    return f == OutputFormat::csv ? "csv" : "json";
}

Engine engine_from_string(std::string_view s) {
    if (s == "oracle") return Engine::oracle;
    if (s == "closed_form") return Engine::closed_form;
    if (s == "both") return Engine::both;
    throw InvalidParameterError("unknown engine '" + std::string(s) +
                                "' (expected oracle, closed_form or both)");
}

OutputFormat format_from_string(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw InvalidParameterError("unknown output format '" + std::string(s) +
                                "' (expected csv or json)");
}

int ScenarioConfig::resolved_points() const {
    if (n_points != 0) return n_points;
    const double density = 100.0; // default grid density per unit tau
    const long autop = std::lround(density * (tau_end - tau_start)) + 1;
    return static_cast<int>(std::max(autop, 2L));
}

std::vector<double> ScenarioConfig::tau_grid() const {
    const int points = resolved_points();
    std::vector<double> taus(points);
    const double step = (tau_end - tau_start) / (points - 1);
    for (int i = 0; i < points; ++i) taus[i] = tau_start + step * i;
    return taus;
}

void ScenarioConfig::validate() const {
    qubit.validate();
    field.validate();
    if (!std::isfinite(tau_start) || !std::isfinite(tau_end) || tau_end <= tau_start)
        throw InvalidParameterError("scenario: need finite tau_start < tau_end");
    if (n_points != 0 && n_points < 2)
        throw InvalidParameterError("scenario: points must be >= 2 (or 0 for the default density)");
    if (!(tail_eps > 0.0) || !(tail_eps < 1e-3))
        throw InvalidParameterError("scenario: tail_eps must lie in (0, 1e-3)");
    if (!(threshold > 0.0) || !std::isfinite(threshold))
        throw InvalidParameterError("scenario: threshold must be a finite positive number");
}

namespace {

// Same bundle as sample_at, for the forensic closed-form series of an
// engine=both run only. A discrepant series can hand over a rho that is not
// a quantum state at all, so here rejected probabilities turn the metric
// fields into NaN (keeping tau and the raw rho) and the entropic-bound slack
// is recorded without being enforced. Primary series always go through the
// strict path.
SqueezingSample sample_at_lenient(const QubitDensityMatrix& rho, double tau) {
    SqueezingSample s;
    s.tau = tau;
    s.exp_x = 2.0 * rho.rho_eg.real();
    s.exp_y = -2.0 * rho.rho_eg.imag();
    s.exp_z = rho.rho_ee - rho.rho_gg();
    s.rho_ee = rho.rho_ee;
    s.rho_eg = rho.rho_eg;
    try {
        const ShannonEntropies h = shannon_entropies(rho);
        s.h_x = h.x;
        s.h_y = h.y;
        s.h_z = h.z;
        s.dh_x = std::exp(h.x);
        s.dh_y = std::exp(h.y);
        s.dh_z = std::exp(h.z);
        std::tie(s.e_x, s.e_y) = entropy_squeeze_factors(h.x, h.y, h.z);
        std::tie(s.v_x, s.v_y) = variance_squeeze_factors(rho);
        s.entropy_sum_slack = h.x + h.y + h.z - 2.0 * std::log(2.0);
    } catch (const CorruptStateError&) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        s.h_x = s.h_y = s.h_z = nan;
        s.dh_x = s.dh_y = s.dh_z = nan;
        s.e_x = s.e_y = nan;
        s.v_x = s.v_y = nan;
        s.entropy_sum_slack = nan;
    }
    return s;
}

} // namespace

TimeSeries run_time_series(const ScenarioConfig& config) {
    config.validate();
    TimeSeries series;
    series.config = config;
    series.config.n_points = config.resolved_points();

    const int n_max = choose_truncation(config.field.n_bar, config.tail_eps);
    const std::vector<double> taus = config.tau_grid();
    series.samples.reserve(taus.size());

    if (config.engine != Engine::closed_form) {
        const FockAmplitudes field = cat_amplitudes(config.field, n_max);
        const JointState init = initial_joint_state(config.qubit, field);
        for (double tau : taus)
            series.samples.push_back(sample_at(reduce_to_qubit(evolve_exact(init, tau)), tau));
    }
    if (config.engine == Engine::closed_form) {
        for (double tau : taus)
            series.samples.push_back(
                sample_at(closed_form_density(config.qubit, config.field, tau, n_max), tau));
    }
    if (config.engine == Engine::both) {
        series.closed_form_samples.reserve(taus.size());
        for (double tau : taus)
            series.closed_form_samples.push_back(sample_at_lenient(
                closed_form_density(config.qubit, config.field, tau, n_max), tau));
        series.validation =
            compare_engines(config.qubit, config.field, taus, n_max, config.threshold);
    }

    for (size_t i = 1; i < series.samples.size(); ++i)
        if (!(series.samples[i].tau > series.samples[i - 1].tau))
            throw InvariantViolationError("time series grid is not strictly increasing");
    return series;
}

std::vector<TimeSeries> run_theta_sweep(const ScenarioConfig& base,
                                        std::span<const double> thetas) {
    std::vector<TimeSeries> out;
    out.reserve(thetas.size());
    for (double theta : thetas) {
        ScenarioConfig c = base;
        c.qubit.theta = theta;
        out.push_back(run_time_series(c));
    }
    return out;
}

std::vector<TimeSeries> run_nbar_sweep(const ScenarioConfig& base,
                                       std::span<const double> nbars) {
    std::vector<TimeSeries> out;
    out.reserve(nbars.size());
    for (double nbar : nbars) {
        ScenarioConfig c = base;
        c.field.n_bar = nbar;
        out.push_back(run_time_series(c));
    }
    return out;
}

std::vector<RhoCDeviationRow> run_rho_c_compare(const ScenarioConfig& base,
                                                std::span<const double> rho_cs) {
    ScenarioConfig reference = base;
    reference.field.rho_c = 0.0;
    const TimeSeries base_series = run_time_series(reference);

    std::vector<RhoCDeviationRow> rows;
    rows.reserve(rho_cs.size());
    for (double rho_c : rho_cs) {
        ScenarioConfig c = base;
        c.field.rho_c = rho_c;
        const TimeSeries series = run_time_series(c);
        RhoCDeviationRow row;
        row.rho_c = rho_c;
        for (size_t i = 0; i < series.samples.size(); ++i) {
            row.max_dev_e_x = std::max(
                row.max_dev_e_x, std::abs(series.samples[i].e_x - base_series.samples[i].e_x));
            row.max_dev_e_y = std::max(
                row.max_dev_e_y, std::abs(series.samples[i].e_y - base_series.samples[i].e_y));
        }
        rows.push_back(row);
    }
    return rows;
}

int count_squeezing_intervals(std::span<const double> values) {
    constexpr double open_below = -1e-9;
    int count = 0;
    bool open = false;
    for (double v : values) {
        if (!open && v < open_below) {
            open = true;
            ++count;
        } else if (open && v >= 0.0) {
            open = false;
        }
    }
    return count;
}

namespace {

using std::numbers::pi;

ScenarioConfig preset_config(double theta, double phi, double n_bar, double beta,
                             double rho_c, double tau_end) {
    ScenarioConfig c;
    c.qubit = {theta, phi};
    c.field = {n_bar, beta, rho_c};
    c.tau_start = 0.0;
    c.tau_end = tau_end;
    c.n_points = 5001;
    return c;
}

const Preset kPresets[] = {
    {"fig1_caption", "strong cat field, equatorial qubit (theta = pi/2, beta = pi/4)",
     preset_config(pi / 2, pi / 2, 25.0, pi / 4, pi / 6, 50.0)},
    {"fig1_text", "strong cat field, excited qubit (theta = 0, beta = 0)",
     preset_config(0.0, pi / 2, 25.0, 0.0, pi / 6, 50.0)},
    {"fig2", "even cat (rho_c = 0), equatorial qubit, short window",
     preset_config(pi / 2, pi / 2, 25.0, pi / 4, 0.0, 5.0)},
    {"fig3a", "theta sweep member: theta = 0",
     preset_config(0.0, pi / 2, 25.0, pi / 4, pi / 6, 50.0)},
    {"fig3b", "theta sweep member: theta = pi/6",
     preset_config(pi / 6, pi / 2, 25.0, pi / 4, pi / 6, 50.0)},
    {"fig3c", "theta sweep member: theta = 2pi/6",
     preset_config(pi / 3, pi / 2, 25.0, pi / 4, pi / 6, 50.0)},
    {"fig3d", "theta sweep member: theta = 5pi/6",
     preset_config(5.0 * pi / 6, pi / 2, 25.0, pi / 4, pi / 6, 50.0)},
    {"fig3e", "theta sweep member: theta = pi",
     preset_config(pi, pi / 2, 25.0, pi / 4, pi / 6, 50.0)},
    {"fig4a", "weak-to-strong field member: n_bar = 15",
     preset_config(pi / 2, pi / 2, 15.0, pi / 4, pi / 6, 50.0)},
    {"fig4b", "weak-to-strong field member: n_bar = 5",
     preset_config(pi / 2, pi / 2, 5.0, pi / 4, pi / 6, 50.0)},
    {"fig4c", "weak-to-strong field member: n_bar = 0.5",
     preset_config(pi / 2, pi / 2, 0.5, pi / 4, pi / 6, 50.0)},
    {"fig4d", "weak-to-strong field member: n_bar = 0.05",
     preset_config(pi / 2, pi / 2, 0.05, pi / 4, pi / 6, 50.0)},
};

} // namespace

std::span<const Preset> presets() { return kPresets; }

const Preset* find_preset(std::string_view name) {
    for (const Preset& p : kPresets)
        if (p.name == name) return &p;
    return nullptr;
}

} // namespace catjc
