#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "duris/channel.hpp"
#include "duris/moments.hpp"
#include "duris/montecarlo.hpp"

using namespace duris;

namespace {

SystemConfig small_config() {
    SystemConfig c;
    c.n_elements = 8;
    c.n_rx = 2;
    c.snr_db = {90.0, 100.0, 110.0, 120.0, 130.0};
    return c;
}

struct ThreadsGuard {
    explicit ThreadsGuard(const char* value) { setenv("RIS_THREADS", value, 1); }
    ~ThreadsGuard() { unsetenv("RIS_THREADS"); }
};

}  // namespace

TEST_CASE("worker_threads honors RIS_THREADS") {
    {
        ThreadsGuard guard("3");
        CHECK(mc::worker_threads() == 3);
    }
    {
        ThreadsGuard guard("0");
        CHECK(mc::worker_threads() >= 1);
    }
}

TEST_CASE("estimates are bitwise identical across worker counts") {
    SystemConfig c = small_config();
    mc::TrialPlan plan;
    plan.master_seed = 5150;
    plan.n_trials = 20000;  // spans several blocks

    std::vector<mc::MetricEstimate> outage1, capacity1, ber1;
    {
        ThreadsGuard guard("1");
        outage1 = mc::run_outage(c, plan);
        capacity1 = mc::run_capacity(c, plan);
        ber1 = mc::run_ssk_ber(c, plan);
    }
    {
        ThreadsGuard guard("8");
        const auto outage8 = mc::run_outage(c, plan);
        const auto capacity8 = mc::run_capacity(c, plan);
        const auto ber8 = mc::run_ssk_ber(c, plan);
        for (std::size_t j = 0; j < outage1.size(); ++j) {
            CHECK(outage1[j].value == outage8[j].value);
            CHECK(outage1[j].ci95_halfwidth == outage8[j].ci95_halfwidth);
            CHECK(capacity1[j].value == capacity8[j].value);
            CHECK(capacity1[j].ci95_halfwidth == capacity8[j].ci95_halfwidth);
            CHECK(ber1[j].value == ber8[j].value);
        }
    }
    // identical plan, identical results
    const auto again = mc::run_outage(c, plan);
    for (std::size_t j = 0; j < outage1.size(); ++j) {
        CHECK(again[j].value == outage1[j].value);
    }
}

TEST_CASE("stub channels pin the outage endpoints") {
    mc::TrialPlan plan;
    plan.n_trials = 5000;
    // constant gain 2, thresholds below and above it
    const auto est = mc::detail::outage_from_gains([](std::uint64_t) { return 2.0; },
                                                   {1.0, 3.0}, plan);
    CHECK(est[0].value == 0.0);
    CHECK(est[1].value == 1.0);
    CHECK(est[0].ci95_halfwidth > 0.0);  // widened interval at empirical zero
    CHECK(est[0].trials == 5000);
}

TEST_CASE("stub capacity equals the closed form") {
    mc::TrialPlan plan;
    plan.n_trials = 4096;
    const double g = 1.7;
    const double s = 0.35;
    const auto est = mc::detail::capacity_from_gains([&](std::uint64_t) { return g; }, {s},
                                                     plan);
    CHECK(est[0].value == doctest::Approx(std::log2(1.0 + s * g * g)).epsilon(1e-12));
    CHECK(est[0].ci95_halfwidth == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("binomial interval covers a stub Bernoulli channel") {
    // gain 0 with probability 0.3, else 2; threshold at 1
    int covered = 0;
    for (int run = 0; run < 100; ++run) {
        mc::TrialPlan plan;
        plan.master_seed = 1000 + run;
        plan.n_trials = 2000;
        const auto est = mc::detail::outage_from_gains(
            [&](std::uint64_t t) {
                auto gen = rng::Xoshiro256pp::for_trial(plan.master_seed, t);
                return gen.uniform01() < 0.3 ? 0.0 : 2.0;
            },
            {1.0}, plan);
        if (std::abs(est[0].value - 0.3) <= est[0].ci95_halfwidth) ++covered;
    }
    CHECK(covered >= 93);
}

TEST_CASE("outage matches a manual count over the sampled gains") {
    SystemConfig c = small_config();
    mc::TrialPlan plan;
    plan.master_seed = 8;
    plan.n_trials = 6000;
    const auto est = mc::run_outage(c, plan);
    const auto gains = mc::sample_gains(c, plan);
    const double gamma_out = c.gamma_out_linear();
    for (std::size_t j = 0; j < c.snr_db.size(); ++j) {
        const double s = channel::snr_scale(c, c.noise_power(c.snr_db[j]));
        std::uint64_t hits = 0;
        for (double g : gains) {
            if (s * g * g <= gamma_out) ++hits;
        }
        CHECK(est[j].value == doctest::Approx(double(hits) / plan.n_trials).epsilon(1e-15));
    }
}

TEST_CASE("empirical SNR samples are the scaled squared gains") {
    SystemConfig c = small_config();
    mc::TrialPlan plan;
    plan.master_seed = 8;
    plan.n_trials = 2000;
    const auto gains = mc::sample_gains(c, plan);
    const auto snrs = mc::empirical_snr_samples(c, plan, 100.0);
    const double s = channel::snr_scale(c, c.noise_power(100.0));
    for (std::size_t t = 0; t < gains.size(); ++t) {
        CHECK(snrs[t] == doctest::Approx(s * gains[t] * gains[t]).epsilon(1e-15));
    }
}

TEST_CASE("antenna policy does not shift outage statistics") {
    SystemConfig c = small_config();
    c.n_elements = 16;
    mc::TrialPlan uniform;
    uniform.master_seed = 21;
    uniform.n_trials = 20000;
    mc::TrialPlan fixed = uniform;
    fixed.policy = mc::AntennaPolicy::fixed;
    fixed.fixed_antenna = 0;
    const auto est_u = mc::run_outage(c, uniform);
    const auto est_f = mc::run_outage(c, fixed);
    for (std::size_t j = 0; j < est_u.size(); ++j) {
        CHECK(std::abs(est_u[j].value - est_f[j].value) <=
              3.0 * (est_u[j].ci95_halfwidth + est_f[j].ci95_halfwidth) + 1e-12);
    }
}

TEST_CASE("non-steered antennas collect less energy") {
    SystemConfig c;
    c.n_elements = 64;
    c.n_rx = 2;
    rng::Xoshiro256pp gen(33, 0);
    double steered = 0.0, other = 0.0;
    const int reps = 2000;
    for (int r = 0; r < reps; ++r) {
        const auto real = channel::sample_realization(c, gen);
        const auto gains = channel::steered_gains(real, 0);
        steered += std::norm(gains[0]);
        other += std::norm(gains[1]);
    }
    CHECK(other / reps < steered / reps);
    CHECK(other / reps < 0.2 * steered / reps);  // large margin at N = 64
}

TEST_CASE("ssk detector hits zero errors without noise and guesses at high noise") {
    SystemConfig c;
    c.n_elements = 16;
    c.n_rx = 2;
    c.snr_db = {250.0};  // noise vanishes relative to the steered gain
    mc::TrialPlan plan;
    plan.master_seed = 3;
    plan.n_trials = 4000;
    const auto clean = mc::run_ssk_ber(c, plan);
    CHECK(clean[0].value == 0.0);

    c.snr_db = {-100.0};  // noise swamps the signal entirely
    const auto noisy = mc::run_ssk_ber(c, plan);
    CHECK(std::abs(noisy[0].value - 0.5) < 3.0 * noisy[0].ci95_halfwidth + 0.02);
}

TEST_CASE("ssk detector requires at least two antennas") {
    SystemConfig c = small_config();
    c.n_rx = 1;
    mc::TrialPlan plan;
    CHECK_THROWS_AS(mc::run_ssk_ber(c, plan), std::domain_error);
}

TEST_CASE("ber declines with SNR within confidence bands") {
    SystemConfig c;
    c.n_elements = 16;
    c.n_rx = 4;
    c.snr_db = {90.0, 100.0, 105.0, 110.0, 120.0};
    mc::TrialPlan plan;
    plan.master_seed = 97;
    plan.n_trials = 8000;
    const auto est = mc::run_ssk_ber(c, plan);
    for (std::size_t j = 1; j < est.size(); ++j) {
        CHECK(est[j].value <=
              est[j - 1].value +
                  3.0 * std::sqrt(est[j].ci95_halfwidth * est[j].ci95_halfwidth +
                                  est[j - 1].ci95_halfwidth * est[j - 1].ci95_halfwidth) +
                  1e-12);
    }
}

TEST_CASE("wilson halfwidth behavior") {
    CHECK(mc::wilson_halfwidth(0, 1000) > 0.0);
    CHECK(mc::wilson_halfwidth(0, 1000) < 0.01);
    const double mid = mc::wilson_halfwidth(500, 1000);
    CHECK(mid == doctest::Approx(1.96 * std::sqrt(0.25 / 1000)).epsilon(0.01));
}
