#include <algorithm>

#include "duris/sweep.hpp"

namespace duris::sweep {

namespace {

// Shared scenario of the reported figures: N_r = 2, f_c = 3 GHz,
// d1 = d2 = 10 m, K = 2, gamma_out = 10 dB, unit powers, Es = 1.
SystemConfig figure_base() {
    SystemConfig c;
    c.n_elements = 64;
    c.n_rx = 2;
    c.carrier_hz = 3e9;
    c.d1_m = 10.0;
    c.d2_m = 10.0;
    c.k1 = 2.0;
    c.k2 = 2.0;
    c.gamma_out_db = 10.0;
    return c;
}

constexpr std::uint64_t kPresetSeed = 20250101;
constexpr std::uint64_t kPresetTrials = 100000;

SweepSpec make_fig1a() {
    SweepSpec spec;
    spec.base = figure_base();
    // Under the squared path-loss convention the outage transitions sit
    // around 79-103 dB of Es/N0 for N = 64..256; the grid brackets them.
    spec.base.snr_db = make_snr_grid(90.0, 130.0, 2.0);
    spec.axis = Axis::n_elements;
    spec.values = {"64", "128", "256"};
    spec.metrics = {SweepMetric::outage_analytic, SweepMetric::outage_mc};
    spec.plan.master_seed = kPresetSeed;
    spec.plan.n_trials = kPresetTrials;
    return spec;
}

SweepSpec make_fig1b() {
    SweepSpec spec;
    spec.base = figure_base();
    spec.base.snr_db = make_snr_grid(96.0, 136.0, 2.0);
    spec.axis = Axis::carrier_hz;
    spec.values = {"3e9", "10e9"};
    spec.metrics = {SweepMetric::outage_analytic, SweepMetric::outage_mc};
    spec.plan.master_seed = kPresetSeed;
    spec.plan.n_trials = kPresetTrials;
    return spec;
}

SweepSpec make_fig2a() {
    SweepSpec spec;
    spec.base = figure_base();
    spec.base.snr_db = make_snr_grid(80.0, 120.0, 2.0);
    spec.axis = Axis::n_elements;
    spec.values = {"64", "128", "256"};
    spec.metrics = {SweepMetric::capacity_integral, SweepMetric::capacity_bound,
                    SweepMetric::capacity_mc};
    spec.plan.master_seed = kPresetSeed;
    spec.plan.n_trials = kPresetTrials;
    return spec;
}

SweepSpec make_fig2b() {
    SweepSpec spec;
    spec.base = figure_base();
    spec.base.n_elements = 128;
    spec.base.snr_db = make_snr_grid(80.0, 120.0, 2.0);
    spec.axis = Axis::d;
    spec.values = {"5", "10", "20"};
    spec.metrics = {SweepMetric::capacity_integral, SweepMetric::capacity_bound,
                    SweepMetric::capacity_mc};
    spec.plan.master_seed = kPresetSeed;
    spec.plan.n_trials = kPresetTrials;
    return spec;
}

// fig4's dual panel; the single panel shares everything but topology and
// the (much lower) SNR range of its transitions.
SweepSpec make_fig4_dual() {
    SweepSpec spec;
    spec.base = figure_base();
    spec.base.n_elements = 128;
    spec.base.snr_db = make_snr_grid(82.0, 122.0, 2.0);
    spec.axis = Axis::k;
    spec.values = {"0", "2", "10"};
    spec.metrics = {SweepMetric::outage_analytic, SweepMetric::outage_mc};
    spec.plan.master_seed = kPresetSeed;
    spec.plan.n_trials = kPresetTrials;
    return spec;
}

SweepSpec make_fig4_single() {
    SweepSpec spec = make_fig4_dual();
    spec.base.topology = Topology::single;
    spec.base.snr_db = make_snr_grid(16.0, 56.0, 2.0);
    return spec;
}

void apply_overrides(SweepSpec& spec, std::optional<std::uint64_t> seed,
                     std::optional<std::uint64_t> trials) {
    if (seed) spec.plan.master_seed = *seed;
    if (trials) {
        if (*trials == 0) throw ConfigError("trials override must be > 0");
        spec.plan.n_trials = *trials;
    }
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"fig1a", "fig1b", "fig2a", "fig2b", "fig4"};
}

bool is_preset(const std::string& name) {
    const auto names = preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SweepSpec preset_spec(const std::string& name) {
    if (name == "fig1a") return make_fig1a();
    if (name == "fig1b") return make_fig1b();
    if (name == "fig2a") return make_fig2a();
    if (name == "fig2b") return make_fig2b();
    if (name == "fig4") return make_fig4_dual();  // dual panel; see run_preset
    throw ConfigError("unknown preset '" + name + "'");
}

SweepResult run_preset(const std::string& name, std::optional<std::uint64_t> seed_override,
                       std::optional<std::uint64_t> trials_override) {
    if (name == "fig4") {
        SweepSpec dual = make_fig4_dual();
        SweepSpec single = make_fig4_single();
        apply_overrides(dual, seed_override, trials_override);
        apply_overrides(single, seed_override, trials_override);
        SweepResult result = run_sweep(dual);
        for (auto& row : result.rows) row.axis_value = "dual/" + row.axis_value;
        SweepResult single_result = run_sweep(single);
        for (auto& row : single_result.rows) {
            row.axis_value = "single/" + row.axis_value;
            result.rows.push_back(std::move(row));
        }
        return result;
    }
    SweepSpec spec = preset_spec(name);
    apply_overrides(spec, seed_override, trials_override);
    return run_sweep(spec);
}

}  // namespace duris::sweep
