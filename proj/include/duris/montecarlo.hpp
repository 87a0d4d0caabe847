#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "duris/config.hpp"
#include "duris/rng.hpp"

namespace duris::mc {

enum class AntennaPolicy { fixed, uniform_random };

// Trial batch description. Every estimate produced from a plan is a pure
// function of (master_seed, n_trials, config): trial t draws from its own
// substream derived from (master_seed, t), and reductions run in fixed
// block order, so reruns are bitwise identical for any worker count.
struct TrialPlan {
    std::uint64_t master_seed = 1;
    std::uint64_t n_trials = 100000;
    AntennaPolicy policy = AntennaPolicy::uniform_random;
    int fixed_antenna = 0;
};

enum class Metric { outage, capacity, ber };

struct MetricEstimate {
    double value = 0.0;
    std::uint64_t trials = 0;
    double ci95_halfwidth = 0.0;
    Metric metric = Metric::outage;
};

// Worker parallelism: RIS_THREADS caps the count (0 or unset = one per
// hardware thread).
unsigned worker_threads();

// Wilson 95% interval half-width for a proportion; stays positive at
// empirical 0 or 1 so deep-tail points carry a widened interval instead
// of a zero one.
double wilson_halfwidth(std::uint64_t hits, std::uint64_t n);

// Empirical outage / capacity / bit error rate across the config's SNR
// grid, one estimate per grid point. A single pass of channel trials
// serves the whole grid (only the noise scale changes per point).
std::vector<MetricEstimate> run_outage(const SystemConfig& config, const TrialPlan& plan);
std::vector<MetricEstimate> run_capacity(const SystemConfig& config, const TrialPlan& plan);

// Received-SSK detection: the data bits pick the steered antenna (always
// uniform over antennas regardless of plan policy), the detector takes
// the largest received magnitude, and bit errors count under the natural
// binary labeling. Requires n_rx >= 2.
std::vector<MetricEstimate> run_ssk_ber(const SystemConfig& config, const TrialPlan& plan);

// Per-trial aligned cascade gains (the exact double sum), in trial order.
std::vector<double> sample_gains(const SystemConfig& config, const TrialPlan& plan);

// Per-trial instantaneous SNR at one grid point, gamma = s * gain^2.
std::vector<double> empirical_snr_samples(const SystemConfig& config, const TrialPlan& plan,
                                          double snr_db_point);

namespace detail {

// Runs n_trials split into fixed-size blocks. Threads grab blocks from a
// shared counter; per-block states are combined by the caller in block
// order, which keeps floating-point reductions independent of the worker
// count.
inline constexpr std::uint64_t kBlockTrials = 4096;

template <class State, class TrialFn>
std::vector<State> run_blocks(std::uint64_t n_trials, unsigned threads, TrialFn&& fn) {
    const std::uint64_t n_blocks = (n_trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<State> states(n_blocks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= n_blocks) break;
            const std::uint64_t begin = b * kBlockTrials;
            const std::uint64_t end = std::min(begin + kBlockTrials, n_trials);
            State state{};
            for (std::uint64_t t = begin; t < end; ++t) fn(t, state);
            states[b] = std::move(state);
        }
    };
    if (threads <= 1 || n_blocks <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const unsigned count = std::min<std::uint64_t>(threads, n_blocks);
        pool.reserve(count);
        for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return states;
}

// Outage estimates from an arbitrary per-trial gain source; used with
// stub channels in tests. thresholds[j] is the gain level b_j such that
// the trial is in outage at point j iff gain <= b_j.
template <class GainFn>
std::vector<MetricEstimate> outage_from_gains(GainFn&& gain_of_trial,
                                              const std::vector<double>& thresholds,
                                              const TrialPlan& plan) {
    struct Block {
        std::vector<std::uint32_t> hits;
    };
    const std::size_t points = thresholds.size();
    auto states = run_blocks<Block>(
        plan.n_trials, worker_threads(), [&](std::uint64_t t, Block& st) {
            if (st.hits.empty()) st.hits.assign(points, 0);
            const double gain = gain_of_trial(t);
            for (std::size_t j = 0; j < points; ++j) {
                st.hits[j] += gain <= thresholds[j] ? 1u : 0u;
            }
        });
    std::vector<MetricEstimate> out(points);
    std::vector<std::uint64_t> hits(points, 0);
    for (const auto& st : states) {
        if (st.hits.empty()) continue;
        for (std::size_t j = 0; j < points; ++j) hits[j] += st.hits[j];
    }
    for (std::size_t j = 0; j < points; ++j) {
        out[j].metric = Metric::outage;
        out[j].trials = plan.n_trials;
        out[j].value = static_cast<double>(hits[j]) / static_cast<double>(plan.n_trials);
        out[j].ci95_halfwidth = wilson_halfwidth(hits[j], plan.n_trials);
    }
    return out;
}

// Capacity estimates (mean of log2(1 + s_j gain^2)) from a gain source.
template <class GainFn>
std::vector<MetricEstimate> capacity_from_gains(GainFn&& gain_of_trial,
                                                const std::vector<double>& scales,
                                                const TrialPlan& plan) {
    struct Block {
        std::vector<double> sum;
        std::vector<double> sumsq;
    };
    const std::size_t points = scales.size();
    auto states = run_blocks<Block>(
        plan.n_trials, worker_threads(), [&](std::uint64_t t, Block& st) {
            if (st.sum.empty()) {
                st.sum.assign(points, 0.0);
                st.sumsq.assign(points, 0.0);
            }
            const double gain = gain_of_trial(t);
            const double g2 = gain * gain;
            for (std::size_t j = 0; j < points; ++j) {
                const double c = std::log2(1.0 + scales[j] * g2);
                st.sum[j] += c;
                st.sumsq[j] += c * c;
            }
        });
    std::vector<MetricEstimate> out(points);
    const double n = static_cast<double>(plan.n_trials);
    for (std::size_t j = 0; j < points; ++j) {
        double sum = 0.0, sumsq = 0.0;
        for (const auto& st : states) {
            if (st.sum.empty()) continue;
            sum += st.sum[j];
            sumsq += st.sumsq[j];
        }
        const double mean = sum / n;
        const double var = n > 1 ? std::max(0.0, (sumsq - sum * sum / n) / (n - 1.0)) : 0.0;
        out[j].metric = Metric::capacity;
        out[j].trials = plan.n_trials;
        out[j].value = mean;
        out[j].ci95_halfwidth = 1.959963984540054 * std::sqrt(var / n);
    }
    return out;
}

}  // namespace detail

}  // namespace duris::mc
