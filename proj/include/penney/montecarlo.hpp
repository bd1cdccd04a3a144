#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "penney/race.hpp"
#include "penney/waiting.hpp"

namespace penney {

/// Deterministic simulation setup; identical configs give identical output.
struct SimConfig {
    uint64_t trials = 100000;
    uint64_t seed = 1;
    uint64_t max_steps = 1000000;
    int threads = 1;
};

inline constexpr const char* kGeneratorId = "splitmix64";

struct RaceSim {
    uint64_t wins = 0, losses = 0, ties = 0, cutoffs = 0;
    double win_freq = 0;      // convention applied, cutoff trials excluded
    double tie_freq = 0;
    double ci99_halfwidth = 0;
    std::string generator = kGeneratorId;
};

RaceSim simulate_race(const Word& u, const Word& v, const BiasVector& bias_u,
                      const BiasVector& bias_v, TieConvention conv, const SimConfig& cfg);

struct WaitingSim {
    uint64_t completed = 0, cutoffs = 0;
    double mean = 0;
    double stderr_mean = 0;
    std::string generator = kGeneratorId;
    /// Empirical survival counts for n = 0..32 (hits later than n).
    std::array<uint64_t, 33> survival_counts{};
};

WaitingSim simulate_waiting(const Word& w, const BiasVector& bias, const SimConfig& cfg);

}  // namespace penney
