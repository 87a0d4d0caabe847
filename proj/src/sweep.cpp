#include "duris/sweep.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"

#include "duris/analytic.hpp"
#include "duris/channel.hpp"

namespace duris::sweep {

using nlohmann::json;

const char* to_string(Axis axis) {
    switch (axis) {
        case Axis::snr_db: return "snr_db";
        case Axis::n_elements: return "n_elements";
        case Axis::carrier_hz: return "carrier_hz";
        case Axis::d: return "d";
        case Axis::k: return "k";
        case Axis::topology: return "topology";
    }
    return "?";
}

const char* to_string(SweepMetric metric) {
    switch (metric) {
        case SweepMetric::outage_analytic: return "outage_analytic";
        case SweepMetric::outage_mc: return "outage_mc";
        case SweepMetric::capacity_integral: return "capacity_integral";
        case SweepMetric::capacity_bound: return "capacity_bound";
        case SweepMetric::capacity_mc: return "capacity_mc";
        case SweepMetric::ber_mc: return "ber_mc";
    }
    return "?";
}

Axis axis_from_string(const std::string& name) {
    for (Axis a : {Axis::snr_db, Axis::n_elements, Axis::carrier_hz, Axis::d, Axis::k,
                   Axis::topology}) {
        if (name == to_string(a)) return a;
    }
    throw ConfigError("sweep: unknown axis '" + name + "'");
}

SweepMetric metric_from_string(const std::string& name) {
    for (SweepMetric m : {SweepMetric::outage_analytic, SweepMetric::outage_mc,
                          SweepMetric::capacity_integral, SweepMetric::capacity_bound,
                          SweepMetric::capacity_mc, SweepMetric::ber_mc}) {
        if (name == to_string(m)) return m;
    }
    throw ConfigError("sweep: unknown metric '" + name + "'");
}

namespace {

double parse_number(const std::string& value, Axis axis) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(std::string("sweep: axis ") + to_string(axis) +
                          ": invalid value '" + value + "'");
    }
}

}  // namespace

SystemConfig apply_axis(const SystemConfig& base, Axis axis, const std::string& value) {
    SystemConfig config = base;
    switch (axis) {
        case Axis::snr_db:
            config.snr_db = {parse_number(value, axis)};
            break;
        case Axis::n_elements: {
            const double v = parse_number(value, axis);
            if (v < 1 || v != std::floor(v)) {
                throw ConfigError("sweep: axis n_elements: invalid value '" + value + "'");
            }
            config.n_elements = static_cast<int>(v);
            break;
        }
        case Axis::carrier_hz:
            config.carrier_hz = parse_number(value, axis);
            break;
        case Axis::d: {
            const double v = parse_number(value, axis);
            config.d1_m = v;
            config.d2_m = v;
            break;
        }
        case Axis::k: {
            const double v = parse_number(value, axis);
            config.k1 = v;
            config.k2 = v;
            break;
        }
        case Axis::topology:
            config.topology = topology_from_string(value);
            break;
    }
    try {
        config.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("sweep: axis ") + to_string(axis) + " value '" +
                          value + "': " + e.what());
    }
    return config;
}

namespace {

void append_curve(SweepResult& result, Axis axis, const std::string& axis_value,
                  const SystemConfig& config, SweepMetric metric,
                  const std::vector<double>& values, const std::vector<double>& ci) {
    for (std::size_t j = 0; j < config.snr_db.size(); ++j) {
        SweepRow row;
        row.axis = to_string(axis);
        row.axis_value = axis_value;
        row.snr_db = config.snr_db[j];
        row.metric = to_string(metric);
        row.value = values[j];
        row.ci95 = ci.empty() ? 0.0 : ci[j];
        result.rows.push_back(std::move(row));
    }
}

std::vector<double> estimate_values(const std::vector<mc::MetricEstimate>& est) {
    std::vector<double> v;
    v.reserve(est.size());
    for (const auto& e : est) v.push_back(e.value);
    return v;
}

std::vector<double> estimate_ci(const std::vector<mc::MetricEstimate>& est) {
    std::vector<double> v;
    v.reserve(est.size());
    for (const auto& e : est) v.push_back(e.ci95_halfwidth);
    return v;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    spec.base.validate();
    if (spec.values.empty()) throw ConfigError("sweep: axis values must be nonempty");
    if (spec.metrics.empty()) throw ConfigError("sweep: metrics must be nonempty");

    SweepResult result;
    result.config_hash = config_hash(spec.base);
    result.master_seed = spec.plan.master_seed;
    result.n_trials = spec.plan.n_trials;
    {
        // Identity residual at the base operating point: a = mu_Z/sigma_Z,
        // z at the outage threshold for the mid-grid SNR.
        const auto m = moments::gain_model(spec.base);
        const double snr_mid = spec.base.snr_db[spec.base.snr_db.size() / 2];
        const double s = channel::snr_scale(spec.base, spec.base.noise_power(snr_mid));
        const double sigma = std::sqrt(m.sigma2_z);
        const double a = m.mu_z / sigma;
        const double z = std::sqrt(spec.base.gamma_out_linear() / s) / sigma;
        result.marcum_q_pair_residual = analytic::marcum_identity_residual(a, z);
    }

    for (const auto& value : spec.values) {
        const SystemConfig config = apply_axis(spec.base, spec.axis, value);
        for (SweepMetric metric : spec.metrics) {
            switch (metric) {
                case SweepMetric::outage_analytic:
                    append_curve(result, spec.axis, value, config, metric,
                                 analytic::outage_curve(config, analytic::OutageForm::exact_folded_normal),
                                 {});
                    break;
                case SweepMetric::outage_mc: {
                    const auto est = mc::run_outage(config, spec.plan);
                    append_curve(result, spec.axis, value, config, metric,
                                 estimate_values(est), estimate_ci(est));
                    break;
                }
                case SweepMetric::capacity_integral:
                    append_curve(result, spec.axis, value, config, metric,
                                 analytic::capacity_curve_integral(config), {});
                    break;
                case SweepMetric::capacity_bound:
                    append_curve(result, spec.axis, value, config, metric,
                                 analytic::capacity_curve_bound(config), {});
                    break;
                case SweepMetric::capacity_mc: {
                    const auto est = mc::run_capacity(config, spec.plan);
                    append_curve(result, spec.axis, value, config, metric,
                                 estimate_values(est), estimate_ci(est));
                    break;
                }
                case SweepMetric::ber_mc: {
                    const auto est = mc::run_ssk_ber(config, spec.plan);
                    append_curve(result, spec.axis, value, config, metric,
                                 estimate_values(est), estimate_ci(est));
                    break;
                }
            }
        }
    }
    return result;
}

SweepSpec sweep_from_config_text(const std::string& text) {
    SweepSpec spec;
    spec.base = config_from_json_text(text);
    json j = json::parse(text);
    if (!j.contains("sweep")) {
        throw ConfigError("config: missing 'sweep' section (or use --preset)");
    }
    const json& sw = j["sweep"];
    if (!sw.is_object()) throw ConfigError("config: 'sweep' must be an object");
    for (const auto& [key, _] : sw.items()) {
        if (key != "axis" && key != "values" && key != "metrics" && key != "seed" &&
            key != "trials" && key != "antenna_policy") {
            throw ConfigError("config: sweep: unknown key '" + key + "'");
        }
    }
    try {
        spec.axis = axis_from_string(sw.at("axis").get<std::string>());
        for (const auto& v : sw.at("values")) {
            if (v.is_string()) {
                spec.values.push_back(v.get<std::string>());
            } else {
                spec.values.push_back(json(v).dump());
            }
        }
        for (const auto& m : sw.at("metrics")) {
            spec.metrics.push_back(metric_from_string(m.get<std::string>()));
        }
        if (sw.contains("seed")) spec.plan.master_seed = sw["seed"].get<std::uint64_t>();
        if (sw.contains("trials")) spec.plan.n_trials = sw["trials"].get<std::uint64_t>();
        if (sw.contains("antenna_policy")) {
            const auto policy = sw["antenna_policy"].get<std::string>();
            if (policy == "uniform_random") {
                spec.plan.policy = mc::AntennaPolicy::uniform_random;
            } else if (policy.rfind("fixed", 0) == 0) {
                spec.plan.policy = mc::AntennaPolicy::fixed;
                const auto open = policy.find('(');
                const auto close = policy.find(')');
                if (open != std::string::npos && close != std::string::npos && close > open) {
                    spec.plan.fixed_antenna =
                        std::stoi(policy.substr(open + 1, close - open - 1));
                }
            } else {
                throw ConfigError("config: sweep: unknown antenna_policy '" + policy + "'");
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: sweep: ") + e.what());
    }
    if (spec.plan.n_trials == 0) throw ConfigError("config: sweep: trials must be > 0");
    return spec;
}

}  // namespace duris::sweep
