#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catjc/squeezing_metrics.hpp"

namespace catjc {

enum class Engine { oracle, closed_form, both };
enum class OutputFormat { csv, json };

const char* to_string(Engine e);
const char* to_string(OutputFormat f);
// Throws InvalidParameterError on unknown names.
Engine engine_from_string(std::string_view s);
OutputFormat format_from_string(std::string_view s);

// Defaults reproduce the canonical strong-field run: an equatorial qubit
// against an nbar = 25 cat state, tau in [0, 50].
struct ScenarioConfig {
    QubitSpec qubit{std::numbers::pi / 2, std::numbers::pi / 2};
    CatFieldSpec field{25.0, std::numbers::pi / 4, std::numbers::pi / 6};
    double tau_start = 0.0;
    double tau_end = 50.0;
    // 0 selects the default density of 100 points per unit tau.
    int n_points = 0;
    Engine engine = Engine::oracle;
    double tail_eps = 1e-12;
    // Agreement gate for engine = both (and the validate flow).
    double threshold = 1e-8;
    std::string output_path;
    OutputFormat output_format = OutputFormat::csv;

    int resolved_points() const;
    std::vector<double> tau_grid() const;
    void validate() const;
};

struct TimeSeries {
    ScenarioConfig config;
    std::vector<SqueezingSample> samples;
    // Present for engine = both (and carries the gate verdict).
    std::optional<ValidationReport> validation;
    // Closed-form samples kept alongside the primary ones for engine = both,
    // so a discrepant run can still write both series. Samples whose metrics
    // cannot be formed from the closed-form density matrix (probabilities
    // beyond the clamp budget) carry NaN metrics but keep tau and rho.
    std::vector<SqueezingSample> closed_form_samples;
};

struct RhoCDeviationRow {
    double rho_c = 0.0;
    double max_dev_e_x = 0.0;
    double max_dev_e_y = 0.0;
};

TimeSeries run_time_series(const ScenarioConfig& config);

// One series per entry, base config with qubit.theta (resp. field.n_bar,
// field.rho_c) replaced. Empty input -> empty output.
std::vector<TimeSeries> run_theta_sweep(const ScenarioConfig& base, std::span<const double> thetas);
std::vector<TimeSeries> run_nbar_sweep(const ScenarioConfig& base, std::span<const double> nbars);

// Max over the grid of |e_a(rho_c) - e_a(rho_c = 0)| per requested rho_c.
std::vector<RhoCDeviationRow> run_rho_c_compare(const ScenarioConfig& base,
                                                std::span<const double> rho_cs);

// Number of maximal squeezing intervals in a factor series: an interval
// opens when the value drops below -1e-9 and closes when it returns to
// >= 0 (the hysteresis keeps float chatter around zero from splitting one
// physical interval into many).
int count_squeezing_intervals(std::span<const double> values);

struct Preset {
    std::string_view name;
    std::string_view blurb;
    ScenarioConfig config;
};

// Named parameter regimes covering the canonical runs (strong cat field with
// a coherent or incoherent qubit, even-cat comparison, theta sweep members,
// weak-field members). Every preset uses the oracle engine and a grid of
// 5001 points.
std::span<const Preset> presets();
const Preset* find_preset(std::string_view name);

} // namespace catjc
