#include "duris/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace duris::channel {

namespace {

constexpr double kSpeedOfLight = 299792458.0;
constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_antenna(const ChannelRealization& real, int m) {
    if (m < 0 || m >= real.n_rx) {
        throw std::out_of_range("antenna index out of range");
    }
}

}  // namespace

cplx sample_rician(double k, double omega, rng::Xoshiro256pp& gen) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw std::domain_error("sample_rician: K-factor must be >= 0");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::domain_error("sample_rician: omega must be > 0");
    }
    const double los = std::sqrt(k / (k + 1.0));
    const double scatter = std::sqrt(1.0 / (k + 1.0)) * kInvSqrt2;
    double n1, n2;
    gen.normal_pair(n1, n2);
    return std::sqrt(omega) * cplx(los + scatter * n1, scatter * n2);
}

ChannelRealization sample_realization(const SystemConfig& config, rng::Xoshiro256pp& gen) {
    config.validate();
    ChannelRealization real;
    real.n = config.n_elements;
    real.n_rx = config.n_rx;
    const int n = real.n;
    const int n_rx = real.n_rx;
    const bool dual = config.topology == Topology::dual;
    if (dual) real.g.resize(static_cast<std::size_t>(n) * n);
    real.h.resize(static_cast<std::size_t>(n_rx) * n);
    for (int i = 0; i < n; ++i) {
        if (dual) {
            for (int k = 0; k < n; ++k) {
                real.g[k + i * static_cast<std::size_t>(n)] =
                    sample_rician(config.k1, config.omega1, gen);
            }
        }
        for (int p = 0; p < n_rx; ++p) {
            real.h[p + i * static_cast<std::size_t>(n_rx)] =
                sample_rician(config.k2, config.omega2, gen);
        }
    }
    return real;
}

double path_loss_zeta(const SystemConfig& config) {
    config.validate();
    const double lambda = kSpeedOfLight / config.carrier_hz;
    const double ratio = lambda / (4.0 * M_PI * config.d1_m * config.d2_m);
    return ratio * ratio;
}

double path_loss_single(const SystemConfig& config) {
    config.validate();
    const double lambda = kSpeedOfLight / config.carrier_hz;
    const double ratio = lambda / (4.0 * M_PI * config.d2_m);
    return ratio * ratio;
}

PhaseProfile optimal_phases(const ChannelRealization& real, int m) {
    check_antenna(real, m);
    PhaseProfile profile;
    profile.phases.resize(real.n);
    for (int i = 0; i < real.n; ++i) {
        cplx col(0.0, 0.0);
        if (!real.g.empty()) {
            for (int k = 0; k < real.n; ++k) col += real.g_at(k, i);
        } else {
            col = cplx(1.0, 0.0);  // single topology: no first hop
        }
        const cplx cascade = col * real.h_at(m, i);
        profile.phases[i] = cascade == cplx(0.0, 0.0) ? 0.0 : -std::arg(cascade);
    }
    return profile;
}

double effective_gain_aligned(const ChannelRealization& real, int m) {
    check_antenna(real, m);
    double gain = 0.0;
    for (int i = 0; i < real.n; ++i) {
        double col = 0.0;
        if (!real.g.empty()) {
            for (int k = 0; k < real.n; ++k) col += std::abs(real.g_at(k, i));
        } else {
            col = 1.0;
        }
        gain += col * std::abs(real.h_at(m, i));
    }
    return gain;
}

cplx effective_gain_dual(const ChannelRealization& real, const PhaseProfile& phases, int m) {
    check_antenna(real, m);
    if (real.g.empty()) {
        throw std::invalid_argument("effective_gain_dual: realization has no first hop");
    }
    if (static_cast<int>(phases.phases.size()) != real.n) {
        throw std::invalid_argument("effective_gain_dual: phase profile dimension mismatch");
    }
    const PhaseProfile opt = optimal_phases(real, m);
    cplx gain(0.0, 0.0);
    for (int i = 0; i < real.n; ++i) {
        double col = 0.0;
        for (int k = 0; k < real.n; ++k) col += std::abs(real.g_at(k, i));
        const double residual = phases.phases[i] - opt.phases[i];
        gain += col * std::abs(real.h_at(m, i)) * std::polar(1.0, residual);
    }
    return gain;
}

cplx effective_gain_raw(const ChannelRealization& real, const PhaseProfile& phases, int m) {
    check_antenna(real, m);
    if (real.g.empty()) {
        throw std::invalid_argument("effective_gain_raw: realization has no first hop");
    }
    if (static_cast<int>(phases.phases.size()) != real.n) {
        throw std::invalid_argument("effective_gain_raw: phase profile dimension mismatch");
    }
    cplx gain(0.0, 0.0);
    for (int i = 0; i < real.n; ++i) {
        cplx col(0.0, 0.0);
        for (int k = 0; k < real.n; ++k) col += real.g_at(k, i);
        gain += std::polar(1.0, phases.phases[i]) * col * real.h_at(m, i);
    }
    return gain;
}

cplx effective_gain_single(const std::vector<cplx>& h_row, const PhaseProfile& phases) {
    if (phases.phases.size() != h_row.size()) {
        throw std::invalid_argument("effective_gain_single: dimension mismatch");
    }
    cplx gain(0.0, 0.0);
    for (std::size_t i = 0; i < h_row.size(); ++i) {
        const double opt = h_row[i] == cplx(0.0, 0.0) ? 0.0 : -std::arg(h_row[i]);
        gain += std::abs(h_row[i]) * std::polar(1.0, phases.phases[i] - opt);
    }
    return gain;
}

std::vector<cplx> steered_gains(const ChannelRealization& real, int m) {
    check_antenna(real, m);
    std::vector<cplx> gains(real.n_rx, cplx(0.0, 0.0));
    for (int i = 0; i < real.n; ++i) {
        double col = 0.0;
        if (!real.g.empty()) {
            for (int k = 0; k < real.n; ++k) col += std::abs(real.g_at(k, i));
        } else {
            col = 1.0;
        }
        const cplx hm = real.h_at(m, i);
        const double mag = std::abs(hm);
        const cplx align = mag > 0.0 ? std::conj(hm) / mag : cplx(1.0, 0.0);
        for (int p = 0; p < real.n_rx; ++p) {
            gains[p] += col * real.h_at(p, i) * align;
        }
    }
    return gains;
}

double snr_scale(const SystemConfig& config, double n0) {
    if (!(n0 > 0.0) || !std::isfinite(n0)) {
        throw std::domain_error("snr_scale: noise power must be > 0");
    }
    if (config.topology == Topology::single) {
        return path_loss_single(config) * config.es / n0;
    }
    const double zeta = path_loss_zeta(config);
    const double factor = config.zeta_exponent == 2 ? zeta * zeta : zeta;
    return factor * config.es / n0;
}

double instantaneous_snr(const SystemConfig& config, const ChannelRealization& real,
                         int m, double n0) {
    const double gain = effective_gain_aligned(real, m);
    return snr_scale(config, n0) * gain * gain;
}

}  // namespace duris::channel
