#pragma once

#include <vector>

#include "penney/poly.hpp"
#include "penney/words.hpp"

namespace penney {

/// Probability vector over an s-letter alphabet, exact, summing to 1.
struct BiasVector {
    std::vector<Rat> p;

    int size() const { return static_cast<int>(p.size()); }
    bool full_support() const {
        for (const auto& v : p)
            if (sign(v) <= 0) return false;
        return true;
    }
    bool is_fair() const {
        for (const auto& v : p)
            if (v != make_rat(1, static_cast<long>(p.size()))) return false;
        return true;
    }

    static BiasVector fair(int s);
    /// (p, 1-p) with p = Pr(H).
    static BiasVector coin(const Rat& p_heads);
    /// From exact fractions; must sum to 1, entries in [0, 1].
    static BiasVector from_entries(std::vector<Rat> entries);

    std::string to_string() const;
};

/// Letter-by-letter probability of the word appearing straight away.
Rat word_probability(const Word& w, const BiasVector& bias);

/// Exact single-pattern waiting-time law at one bias.
struct WaitingLaw {
    Word word;
    BiasVector bias;
    std::vector<std::pair<int, Rat>> h_weights;  // border length -> 1/Pr(prefix)
    QPoly pgf_num, pgf_den;  // E[x^tau] = pgf_num/pgf_den, integer-normalized
    Rat mean;
    std::vector<Rat> a;  // a[n] = Pr(tau = n), n = 0..horizon
    std::vector<Rat> S;  // S[n] = Pr(tau > n), n = 0..horizon
    int horizon = 0;
};

/// Throws DomainError("ZeroProbabilityLetter") when a letter of w has
/// probability zero (the pattern then never appears).
WaitingLaw waiting_law(const Word& w, const BiasVector& bias, int horizon);

Rat expected_waiting(const Word& w, const BiasVector& bias);

/// E[tau_w](p) for a coin with common bias p, as a reduced rational function.
RatFunc mean_symbolic(const Word& w);

/// max(64, 8*|w|*ceil(1/min letter probability)); configurable upstream.
int default_horizon(const Word& w, const BiasVector& bias);

}  // namespace penney
