#pragma once
/*
 * Seeded RNG for deterministic Monte Carlo trials.
 *
 * xoshiro256++ core seeded through SplitMix64, with explicit
 * Box-Muller normals and inverse-CDF categorical draws, so that a given
 * seed produces a bitwise-identical stream on every platform (the std::
 * distributions make no such promise).
 *
 * Stream splitting: trial i of a run with base seed B draws from a
 * generator seeded with
 *
 *     derive_seed(B, i) = mix(mix(B) ^ mix(GOLDEN * (i + 1)))
 *
 * where mix is one SplitMix64 output step and GOLDEN = 0x9E3779B97F4A7C15.
 * Trial i's stream therefore never depends on how many other trials run.
 */

#include <cmath>
#include <cstdint>
#include <span>

#include "asn2t/errors.hpp"

namespace asn2t {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// One output step of SplitMix64 (state update + finalizer).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t s0 = base;
    std::uint64_t a = splitmix64(s0);
    std::uint64_t s1 = kGolden * (index + 1);
    std::uint64_t b = splitmix64(s1);
    std::uint64_t s2 = a ^ b;
    return splitmix64(s2);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) word = splitmix64(s);
    }

    static Rng for_trial(std::uint64_t base_seed, std::uint64_t trial_index) {
        return Rng(derive_seed(base_seed, trial_index));
    }

    std::uint64_t next_u64() {
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

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log argument.
    double uniform01_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Basic Box-Muller; consumes exactly two uniforms per call.
    double normal(double mean, double stddev) {
        const double u1 = uniform01_open();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * kPi * u2);
    }

    // Inverse-CDF draw; consumes exactly one uniform. Probabilities must be
    // nonnegative; any rounding deficit is assigned to the last category.
    int categorical(std::span<const double> probs) {
        if (probs.empty()) throw ContractError("categorical: empty probability vector");
        const double u = uniform01();
        double cum = 0.0;
        for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
            cum += probs[i];
            if (u < cum) return static_cast<int>(i);
        }
        return static_cast<int>(probs.size() - 1);
    }

private:
    static constexpr double kPi = 3.14159265358979323846;
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

} // namespace asn2t
