#include "doctest.h"
#include "penney/montecarlo.hpp"

#include <cmath>

using namespace penney;

namespace {

Word W(const char* s, int alpha = 2) { return Word::parse(s, alpha); }
Rat q(const char* s) { return rat_from_string(s); }

}  // namespace

TEST_CASE("bit-for-bit reproducibility, independent of threading") {
    SimConfig cfg{20000, 424242, 100000, 1};
    BiasVector fair = BiasVector::fair(2);
    auto a = simulate_race(W("HH"), W("HT"), fair, fair, TieConvention::RandomTieBreak, cfg);
    auto b = simulate_race(W("HH"), W("HT"), fair, fair, TieConvention::RandomTieBreak, cfg);
    CHECK(a.wins == b.wins);
    CHECK(a.ties == b.ties);
    cfg.threads = 2;
    auto c = simulate_race(W("HH"), W("HT"), fair, fair, TieConvention::RandomTieBreak, cfg);
    CHECK(a.wins == c.wins);
    CHECK(a.losses == c.losses);
    CHECK(a.ties == c.ties);
    CHECK(a.generator == "splitmix64");
}

TEST_CASE("race frequencies sit within 3 sigma of exact values") {
    SimConfig cfg{200000, 7, 100000, 2};
    BiasVector fair = BiasVector::fair(2);
    auto sim = simulate_race(W("HH"), W("HT"), fair, fair, TieConvention::RandomTieBreak, cfg);
    double exact = q("95/242").get_d();
    CHECK(std::abs(sim.win_freq - exact) <= 3.0 / 2.5758 * sim.ci99_halfwidth);

    auto self = simulate_race(W("HTH"), W("HTH"), fair, fair, TieConvention::RandomTieBreak, cfg);
    CHECK(std::abs(self.win_freq - 0.5) <= 3.0 / 2.5758 * self.ci99_halfwidth);
}

TEST_CASE("waiting-time means match theory") {
    SimConfig cfg{200000, 99, 100000, 2};
    auto sim = simulate_waiting(W("HTHT"), BiasVector::fair(2), cfg);
    CHECK(sim.cutoffs == 0);
    CHECK(std::abs(sim.mean - 20.0) <= 3 * sim.stderr_mean);

    auto geo = simulate_waiting(W("H"), BiasVector::fair(2), cfg);
    CHECK(std::abs(geo.mean - 2.0) <= 3 * geo.stderr_mean);

    auto biased = simulate_waiting(W("HH"), BiasVector::coin(q("3/5")), cfg);
    double expect = q("40/9").get_d();
    CHECK(std::abs(biased.mean - expect) <= 3 * biased.stderr_mean);
}

TEST_CASE("empirical survival curve tracks exact tails within 4 sigma") {
    SimConfig cfg{100000, 2024, 100000, 2};
    for (const Word& w : enumerate_patterns(4, 2)) {
        auto sim = simulate_waiting(w, BiasVector::fair(2), cfg);
        auto law = waiting_law(w, BiasVector::fair(2), 64);
        double n = static_cast<double>(cfg.trials);
        for (int t = 1; t <= 32; ++t) {
            double exact = law.S[t].get_d();
            double se = std::sqrt(std::max(exact * (1 - exact), 1e-12) / n);
            double freq = static_cast<double>(sim.survival_counts[t]) / n;
            CHECK(std::abs(freq - exact) <= 4 * se + 1e-9);
        }
    }
}

TEST_CASE("cutoffs are counted, not fatal") {
    SimConfig cfg{500, 5, 8, 1};  // tiny cutoff forces truncation
    auto sim = simulate_waiting(W("HHHHHH"), BiasVector::coin(q("1/4")), cfg);
    CHECK(sim.cutoffs > 0);
    CHECK(sim.completed + sim.cutoffs == 500);
}
