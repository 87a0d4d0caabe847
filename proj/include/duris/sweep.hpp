#pragma once

#include <optional>
#include <string>
#include <vector>

#include "duris/config.hpp"
#include "duris/montecarlo.hpp"

namespace duris::sweep {

enum class Axis { snr_db, n_elements, carrier_hz, d, k, topology };

enum class SweepMetric {
    outage_analytic,
    outage_mc,
    capacity_integral,
    capacity_bound,
    capacity_mc,
    ber_mc,
};

const char* to_string(Axis axis);
const char* to_string(SweepMetric metric);
Axis axis_from_string(const std::string& name);
SweepMetric metric_from_string(const std::string& name);

// One experiment grid: the base scenario, the parameter axis with its
// values (as written in the config, e.g. "128", "3e9", "single"), the
// metrics to evaluate, and the trial plan for the Monte Carlo ones.
struct SweepSpec {
    SystemConfig base;
    Axis axis = Axis::n_elements;
    std::vector<std::string> values;
    std::vector<SweepMetric> metrics;
    mc::TrialPlan plan;
};

struct SweepRow {
    std::string axis;
    std::string axis_value;
    double snr_db = 0.0;
    std::string metric;
    double value = 0.0;
    double ci95 = 0.0;  // 0 for analytic metrics
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::string config_hash;       // hash of the base scenario
    std::uint64_t master_seed = 0;
    std::uint64_t n_trials = 0;
    // Printed-identity gap at the base scenario's normalized operating
    // point, carried into emitted metadata.
    double marcum_q_pair_residual = 0.0;
};

// Applies one axis value to a copy of the base config. Throws ConfigError
// naming the offending entry for invalid axis/value combinations.
SystemConfig apply_axis(const SystemConfig& base, Axis axis, const std::string& value);

// Evaluates every requested metric at every (axis value, SNR) grid point.
// Deterministic given the plan; one row per (axis value, SNR, metric).
SweepResult run_sweep(const SweepSpec& spec);

// Figure-reproduction presets. Names: fig1a, fig1b, fig2a, fig2b, fig4.
// fig4 runs the dual and single topologies back to back and merges the
// rows with "dual/"- and "single/"-prefixed axis values.
bool is_preset(const std::string& name);
std::vector<std::string> preset_names();
SweepResult run_preset(const std::string& name, std::optional<std::uint64_t> seed_override,
                       std::optional<std::uint64_t> trials_override);

// The preset's base spec (before overrides), exposed for inspection.
SweepSpec preset_spec(const std::string& name);

// Parses the optional "sweep" section of a config file into a spec.
SweepSpec sweep_from_config_text(const std::string& text);

}  // namespace duris::sweep
