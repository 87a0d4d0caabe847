#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace duris {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an iterative numerical routine cannot reach its tolerance;
// carries the achieved error estimate in the message.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_error(achieved) {}
    double achieved_error;
};

enum class Topology { dual, single };

// Full scenario description. Defaults reproduce the baseline dual-RIS
// link: 64 elements per surface, two receive antennas, 3 GHz carrier,
// 10 m hops, K = 2 Rician fading, unit powers, outage threshold 10 dB.
struct SystemConfig {
    int n_elements = 64;      // N, per RIS
    int n_rx = 2;             // N_r, power of two (log2(N_r) bits per symbol)
    double carrier_hz = 3e9;  // f_c
    double d1_m = 10.0;       // first hop distance
    double d2_m = 10.0;       // second hop distance
    double k1 = 2.0;          // Rician K-factor, first hop
    double k2 = 2.0;          // Rician K-factor, second hop
    double omega1 = 1.0;      // per-coefficient power, first hop
    double omega2 = 1.0;      // per-coefficient power, second hop
    double es = 1.0;          // symbol energy
    std::vector<double> snr_db;        // evaluation grid of 10 log10(Es/N0)
    double gamma_out_db = 10.0;        // outage threshold
    Topology topology = Topology::dual;
    // Exponent applied to the dual-hop path-loss factor zeta inside the
    // SNR. 2 follows the analyzed expression; 1 applies the factor once.
    int zeta_exponent = 2;

    SystemConfig();  // fills the default 0..40 dB grid

    void validate() const;                 // throws ConfigError
    double gamma_out_linear() const;       // 10^(gamma_out_db / 10)
    double noise_power(double snr_db_point) const;  // N0 = Es / 10^(snr/10)
};

std::vector<double> make_snr_grid(double start_db, double stop_db, double step_db);

const char* to_string(Topology t);
Topology topology_from_string(const std::string& name);

// JSON round trip. The schema is a flat, versioned key/value document;
// unknown keys are rejected so experiment files stay diff-able and typo
// free. snr_db accepts either an explicit array or
// {"start": .., "stop": .., "step": ..}.
SystemConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const SystemConfig& config);

// FNV-1a hash of the canonical (key-sorted) JSON serialization, so two
// semantically identical configs hash identically regardless of key
// order in the source file.
std::string config_hash(const SystemConfig& config);

}  // namespace duris
