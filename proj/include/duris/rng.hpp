#pragma once

#include <cmath>
#include <cstdint>

namespace duris::rng {

// splitmix64 step, used only to expand seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256++ generator. One instance per Monte Carlo trial, derived
// deterministically from (master seed, trial index), so results do not
// depend on how trials are scheduled across threads.
class Xoshiro256pp {
public:
    Xoshiro256pp() : Xoshiro256pp(1, 0) {}

    Xoshiro256pp(std::uint64_t master_seed, std::uint64_t substream) {
        std::uint64_t sm = master_seed + (substream + 1) * 0x9E3779B97F4A7C15ULL;
        for (auto& word : state_) word = splitmix64(sm);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    static Xoshiro256pp for_trial(std::uint64_t master_seed, std::uint64_t trial) {
        return Xoshiro256pp(master_seed, trial);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), n >= 1. Rejection keeps it unbiased.
    std::uint32_t uniform_below(std::uint32_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return static_cast<std::uint32_t>(x % n);
    }

    // Two independent standard normal draws (Marsaglia polar method).
    void normal_pair(double& n1, double& n2) {
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        n1 = u * f;
        n2 = v * f;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace duris::rng
