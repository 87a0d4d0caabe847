#include "duris/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>

#include "json.hpp"

namespace duris {

using nlohmann::json;

SystemConfig::SystemConfig() : snr_db(make_snr_grid(0.0, 40.0, 2.0)) {}

std::vector<double> make_snr_grid(double start_db, double stop_db, double step_db) {
    if (!(step_db > 0.0) || stop_db < start_db) {
        throw ConfigError("snr grid: need step > 0 and stop >= start");
    }
    std::vector<double> grid;
    const int count = static_cast<int>(std::floor((stop_db - start_db) / step_db + 1e-9)) + 1;
    grid.reserve(count);
    for (int i = 0; i < count; ++i) grid.push_back(start_db + i * step_db);
    return grid;
}

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void require(bool ok, const char* what) {
    if (!ok) throw ConfigError(std::string("config: ") + what);
}

}  // namespace

void SystemConfig::validate() const {
    require(n_elements >= 1, "n_elements must be >= 1");
    require(is_power_of_two(n_rx), "n_rx must be a power of two");
    require(carrier_hz > 0.0 && std::isfinite(carrier_hz), "carrier_hz must be > 0");
    require(d1_m > 0.0 && std::isfinite(d1_m), "d1_m must be > 0");
    require(d2_m > 0.0 && std::isfinite(d2_m), "d2_m must be > 0");
    require(k1 >= 0.0 && std::isfinite(k1), "k1 must be >= 0");
    require(k2 >= 0.0 && std::isfinite(k2), "k2 must be >= 0");
    require(omega1 > 0.0 && std::isfinite(omega1), "omega1 must be > 0");
    require(omega2 > 0.0 && std::isfinite(omega2), "omega2 must be > 0");
    require(es > 0.0 && std::isfinite(es), "es must be > 0");
    require(!snr_db.empty(), "snr_db grid must be nonempty");
    for (double v : snr_db) require(std::isfinite(v), "snr_db entries must be finite");
    require(std::isfinite(gamma_out_db), "gamma_out_db must be finite");
    require(zeta_exponent == 1 || zeta_exponent == 2, "zeta_exponent must be 1 or 2");
}

double SystemConfig::gamma_out_linear() const {
    return std::pow(10.0, gamma_out_db / 10.0);
}

double SystemConfig::noise_power(double snr_db_point) const {
    return es / std::pow(10.0, snr_db_point / 10.0);
}

const char* to_string(Topology t) {
    return t == Topology::dual ? "dual" : "single";
}

Topology topology_from_string(const std::string& name) {
    if (name == "dual") return Topology::dual;
    if (name == "single") return Topology::single;
    throw ConfigError("config: unknown topology '" + name + "'");
}

namespace {

const std::set<std::string> kKnownKeys = {
    "schema_version", "n_elements", "n_rx", "carrier_hz", "d1_m", "d2_m",
    "k1", "k2", "omega1", "omega2", "es", "snr_db", "gamma_out_db",
    "topology", "zeta_exponent", "sweep"};

std::vector<double> parse_snr_grid(const json& j) {
    if (j.is_array()) {
        std::vector<double> grid;
        for (const auto& v : j) {
            if (!v.is_number()) throw ConfigError("config: snr_db entries must be numbers");
            grid.push_back(v.get<double>());
        }
        return grid;
    }
    if (j.is_object()) {
        for (const auto& [key, _] : j.items()) {
            if (key != "start" && key != "stop" && key != "step") {
                throw ConfigError("config: snr_db range accepts start/stop/step only");
            }
        }
        return make_snr_grid(j.at("start").get<double>(), j.at("stop").get<double>(),
                             j.at("step").get<double>());
    }
    throw ConfigError("config: snr_db must be an array or a start/stop/step object");
}

}  // namespace

SystemConfig config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");

    for (const auto& [key, _] : j.items()) {
        if (kKnownKeys.find(key) == kKnownKeys.end()) {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }
    if (j.contains("schema_version") && j["schema_version"].get<int>() != 1) {
        throw ConfigError("config: unsupported schema_version");
    }

    SystemConfig c;
    try {
        if (j.contains("n_elements")) c.n_elements = j["n_elements"].get<int>();
        if (j.contains("n_rx")) c.n_rx = j["n_rx"].get<int>();
        if (j.contains("carrier_hz")) c.carrier_hz = j["carrier_hz"].get<double>();
        if (j.contains("d1_m")) c.d1_m = j["d1_m"].get<double>();
        if (j.contains("d2_m")) c.d2_m = j["d2_m"].get<double>();
        if (j.contains("k1")) c.k1 = j["k1"].get<double>();
        if (j.contains("k2")) c.k2 = j["k2"].get<double>();
        if (j.contains("omega1")) c.omega1 = j["omega1"].get<double>();
        if (j.contains("omega2")) c.omega2 = j["omega2"].get<double>();
        if (j.contains("es")) c.es = j["es"].get<double>();
        if (j.contains("snr_db")) c.snr_db = parse_snr_grid(j["snr_db"]);
        if (j.contains("gamma_out_db")) c.gamma_out_db = j["gamma_out_db"].get<double>();
        if (j.contains("topology")) c.topology = topology_from_string(j["topology"].get<std::string>());
        if (j.contains("zeta_exponent")) c.zeta_exponent = j["zeta_exponent"].get<int>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

std::string config_to_json_text(const SystemConfig& config) {
    json j;
    j["schema_version"] = 1;
    j["n_elements"] = config.n_elements;
    j["n_rx"] = config.n_rx;
    j["carrier_hz"] = config.carrier_hz;
    j["d1_m"] = config.d1_m;
    j["d2_m"] = config.d2_m;
    j["k1"] = config.k1;
    j["k2"] = config.k2;
    j["omega1"] = config.omega1;
    j["omega2"] = config.omega2;
    j["es"] = config.es;
    j["snr_db"] = config.snr_db;
    j["gamma_out_db"] = config.gamma_out_db;
    j["topology"] = to_string(config.topology);
    j["zeta_exponent"] = config.zeta_exponent;
    return j.dump(2);
}

std::string config_hash(const SystemConfig& config) {
    // nlohmann::json stores object keys sorted, so dump() is canonical.
    const std::string canonical = config_to_json_text(config);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace duris
