#include "duris/montecarlo.hpp"

#include <bit>
#include <complex>
#include <cstdlib>
#include <stdexcept>

#include "duris/channel.hpp"

namespace duris::mc {

namespace {

// Per-trial channel pass in the canonical draw order (antenna pick, then
// element-major coefficients). Streams the aligned gain without
// materializing the matrices.
struct TrialChannel {
    const SystemConfig* config;
    double los1, scatter1, scale1;  // first hop constants
    double los2, scatter2, scale2;  // second hop constants
    bool dual;
    int n, n_rx;

    explicit TrialChannel(const SystemConfig& c) : config(&c) {
        n = c.n_elements;
        n_rx = c.n_rx;
        dual = c.topology == Topology::dual;
        los1 = std::sqrt(c.k1 / (c.k1 + 1.0));
        scatter1 = std::sqrt(0.5 / (c.k1 + 1.0));
        scale1 = std::sqrt(c.omega1);
        los2 = std::sqrt(c.k2 / (c.k2 + 1.0));
        scatter2 = std::sqrt(0.5 / (c.k2 + 1.0));
        scale2 = std::sqrt(c.omega2);
    }

    int pick_antenna(rng::Xoshiro256pp& gen, const TrialPlan& plan, bool force_uniform) const {
        if (force_uniform || plan.policy == AntennaPolicy::uniform_random) {
            return static_cast<int>(gen.uniform_below(static_cast<std::uint32_t>(n_rx)));
        }
        if (plan.fixed_antenna < 0 || plan.fixed_antenna >= n_rx) {
            throw std::domain_error("trial plan: fixed antenna out of range");
        }
        return plan.fixed_antenna;
    }

    // Aligned gain toward antenna m; draws the full canonical stream.
    double aligned_gain(rng::Xoshiro256pp& gen, int m) const {
        double gain = 0.0;
        double n1, n2;
        for (int i = 0; i < n; ++i) {
            double col = 1.0;
            if (dual) {
                col = 0.0;
                for (int k = 0; k < n; ++k) {
                    gen.normal_pair(n1, n2);
                    const double re = los1 + scatter1 * n1;
                    const double im = scatter1 * n2;
                    col += std::sqrt(re * re + im * im);
                }
                col *= scale1;
            }
            double h_m = 0.0;
            for (int p = 0; p < n_rx; ++p) {
                gen.normal_pair(n1, n2);
                const double re = los2 + scatter2 * n1;
                const double im = scatter2 * n2;
                if (p == m) h_m = std::sqrt(re * re + im * im) * scale2;
            }
            gain += col * h_m;
        }
        return gain;
    }

    // Steered complex gains at every antenna plus unit receiver noise,
    // for the SSK detector.
    void steered_gains_and_noise(rng::Xoshiro256pp& gen, int m,
                                 std::vector<std::complex<double>>& gains,
                                 std::vector<std::complex<double>>& noise) const {
        gains.assign(n_rx, {0.0, 0.0});
        noise.resize(n_rx);
        double n1, n2;
        std::vector<std::complex<double>> h_col(n_rx);
        for (int i = 0; i < n; ++i) {
            double col = 1.0;
            if (dual) {
                col = 0.0;
                for (int k = 0; k < n; ++k) {
                    gen.normal_pair(n1, n2);
                    const double re = los1 + scatter1 * n1;
                    const double im = scatter1 * n2;
                    col += std::sqrt(re * re + im * im);
                }
                col *= scale1;
            }
            for (int p = 0; p < n_rx; ++p) {
                gen.normal_pair(n1, n2);
                h_col[p] = std::complex<double>(los2 + scatter2 * n1, scatter2 * n2) * scale2;
            }
            const double mag = std::abs(h_col[m]);
            const std::complex<double> align =
                mag > 0.0 ? std::conj(h_col[m]) / mag : std::complex<double>(1.0, 0.0);
            for (int p = 0; p < n_rx; ++p) gains[p] += col * h_col[p] * align;
        }
        constexpr double kInvSqrt2 = 0.70710678118654752440;
        for (int p = 0; p < n_rx; ++p) {
            gen.normal_pair(n1, n2);
            noise[p] = std::complex<double>(n1 * kInvSqrt2, n2 * kInvSqrt2);
        }
    }
};

std::vector<double> snr_scales(const SystemConfig& config) {
    std::vector<double> scales;
    scales.reserve(config.snr_db.size());
    for (double snr : config.snr_db) {
        scales.push_back(channel::snr_scale(config, config.noise_power(snr)));
    }
    return scales;
}

}  // namespace

unsigned worker_threads() {
    if (const char* env = std::getenv("RIS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

double wilson_halfwidth(std::uint64_t hits, std::uint64_t n) {
    if (n == 0) return 0.5;
    const double z = 1.959963984540054;
    const double z2 = z * z;
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(hits) / nn;
    return z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / (1.0 + z2 / nn);
}

std::vector<MetricEstimate> run_outage(const SystemConfig& config, const TrialPlan& plan) {
    config.validate();
    const TrialChannel channel(config);
    const double gamma_out = config.gamma_out_linear();
    // gamma <= gamma_out  <=>  gain <= sqrt(gamma_out / s)
    std::vector<double> thresholds;
    for (double s : snr_scales(config)) thresholds.push_back(std::sqrt(gamma_out / s));
    return detail::outage_from_gains(
        [&](std::uint64_t t) {
            auto gen = rng::Xoshiro256pp::for_trial(plan.master_seed, t);
            const int m = channel.pick_antenna(gen, plan, false);
            return channel.aligned_gain(gen, m);
        },
        thresholds, plan);
}

std::vector<MetricEstimate> run_capacity(const SystemConfig& config, const TrialPlan& plan) {
    config.validate();
    const TrialChannel channel(config);
    return detail::capacity_from_gains(
        [&](std::uint64_t t) {
            auto gen = rng::Xoshiro256pp::for_trial(plan.master_seed, t);
            const int m = channel.pick_antenna(gen, plan, false);
            return channel.aligned_gain(gen, m);
        },
        snr_scales(config), plan);
}

std::vector<MetricEstimate> run_ssk_ber(const SystemConfig& config, const TrialPlan& plan) {
    config.validate();
    if (config.n_rx < 2) {
        throw std::domain_error("run_ssk_ber: need at least two receive antennas");
    }
    const TrialChannel channel(config);
    const auto scales = snr_scales(config);
    const std::size_t points = scales.size();
    const int bits = std::bit_width(static_cast<unsigned>(config.n_rx)) - 1;

    struct Block {
        std::vector<std::uint32_t> bit_errors;
        std::vector<std::complex<double>> gains, noise;  // scratch
    };
    auto states = detail::run_blocks<Block>(
        plan.n_trials, worker_threads(), [&](std::uint64_t t, Block& st) {
            if (st.bit_errors.empty()) st.bit_errors.assign(points, 0);
            auto gen = rng::Xoshiro256pp::for_trial(plan.master_seed, t);
            const int m = channel.pick_antenna(gen, plan, true);
            channel.steered_gains_and_noise(gen, m, st.gains, st.noise);
            for (std::size_t j = 0; j < points; ++j) {
                const double amp = std::sqrt(scales[j]);
                int best = 0;
                double best_score = -1.0;
                for (int p = 0; p < config.n_rx; ++p) {
                    const std::complex<double> y = amp * st.gains[p] + st.noise[p];
                    const double score = std::norm(y);
                    if (score > best_score) {
                        best_score = score;
                        best = p;
                    }
                }
                st.bit_errors[j] +=
                    static_cast<std::uint32_t>(std::popcount(static_cast<unsigned>(m ^ best)));
            }
        });

    std::vector<MetricEstimate> out(points);
    const std::uint64_t bit_total = plan.n_trials * static_cast<std::uint64_t>(bits);
    for (std::size_t j = 0; j < points; ++j) {
        std::uint64_t errors = 0;
        for (const auto& st : states) {
            if (!st.bit_errors.empty()) errors += st.bit_errors[j];
        }
        out[j].metric = Metric::ber;
        out[j].trials = plan.n_trials;
        out[j].value = static_cast<double>(errors) / static_cast<double>(bit_total);
        out[j].ci95_halfwidth = wilson_halfwidth(errors, bit_total);
    }
    return out;
}

std::vector<double> sample_gains(const SystemConfig& config, const TrialPlan& plan) {
    config.validate();
    const TrialChannel channel(config);
    std::vector<double> gains(plan.n_trials);
    struct Empty {};
    detail::run_blocks<Empty>(plan.n_trials, worker_threads(),
                              [&](std::uint64_t t, Empty&) {
                                  auto gen = rng::Xoshiro256pp::for_trial(plan.master_seed, t);
                                  const int m = channel.pick_antenna(gen, plan, false);
                                  gains[t] = channel.aligned_gain(gen, m);
                              });
    return gains;
}

std::vector<double> empirical_snr_samples(const SystemConfig& config, const TrialPlan& plan,
                                          double snr_db_point) {
    const double s = channel::snr_scale(config, config.noise_power(snr_db_point));
    auto gains = sample_gains(config, plan);
    for (double& g : gains) g = s * g * g;
    return gains;
}

}  // namespace duris::mc
