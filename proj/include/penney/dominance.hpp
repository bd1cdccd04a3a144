#pragma once

#include <string>

#include "penney/waiting.hpp"
#include "penney/words.hpp"

namespace penney {

enum class Dominance {
    FirstDominates,   // first pattern's waiting time is stochastically larger
    SecondDominates,
    Equivalent,
    Incomparable,
    ConsistentUpTo,  // finite-horizon lean without a certificate
};

struct DominanceVerdict {
    Dominance kind = Dominance::ConsistentUpTo;
    bool certified = false;
    std::string certificate;  // "fair-lex", "substring", "profile" when certified

    // Incomparable evidence: two horizons with opposite strict inequalities
    int n_lo = -1, n_hi = -1;
    Rat tail_first_lo, tail_second_lo, tail_first_hi, tail_second_hi;

    // ConsistentUpTo data
    int horizon = 0;
    int leaning = 0;  // +1: first leads (dominates so far), -1: second, 0: tied
};

/// Lexicographic sign rule on border indicator vectors; total under fairness.
DominanceVerdict compare_fair(const Word& u, const Word& v, int s);

/// Exact tail comparison to the horizon; certified verdicts only via the
/// fair rule, substring paths, or profile equality.
DominanceVerdict compare_biased(const Word& u, const Word& v, const BiasVector& bias, int horizon);

struct IncomparabilityWitness {
    Word first, second;
    int n;
};

/// For p != 1/2, a pair with incomparable waiting times (the run pair H^n,
/// H^(n-1)T or its mirror). Throws DomainError("FairCoin") at p = 1/2.
IncomparabilityWitness incomparability_witness(const Rat& p);

/// True when inner occurs in outer as a contiguous block.
bool is_substring(const Word& inner, const Word& outer);

}  // namespace penney
