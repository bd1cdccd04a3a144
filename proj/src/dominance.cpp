#include "penney/dominance.hpp"

#include <algorithm>

namespace penney {

bool is_substring(const Word& inner, const Word& outer) {
    if (inner.alphabet_size != outer.alphabet_size) return false;
    if (inner.length() > outer.length()) return false;
    for (int off = 0; off + inner.length() <= outer.length(); ++off) {
        if (std::equal(inner.symbols.begin(), inner.symbols.end(), outer.symbols.begin() + off))
            return true;
    }
    return false;
}

DominanceVerdict compare_fair(const Word& u, const Word& v, int s) {
    if (s < 2) throw DomainError("BadAlphabet", "alphabet size must be at least 2");
    if (u.alphabet_size != s || v.alphabet_size != s)
        throw DomainError("BadAlphabet", "patterns do not live on the requested alphabet");
    auto bu = borders(u), bv = borders(v);
    const int top = std::max(u.length(), v.length());
    int lstar = 0, owner = 0;
    for (int l = 1; l <= top; ++l) {
        bool in_u = std::binary_search(bu.begin(), bu.end(), l);
        bool in_v = std::binary_search(bv.begin(), bv.end(), l);
        if (in_u != in_v) {
            lstar = l;
            owner = in_u ? +1 : -1;
        }
    }
    DominanceVerdict verdict;
    verdict.certified = true;
    verdict.certificate = "fair-lex";
    if (lstar == 0) {
        verdict.kind = Dominance::Equivalent;
        return verdict;
    }
    verdict.kind = owner > 0 ? Dominance::FirstDominates : Dominance::SecondDominates;
    // the lex verdict must agree with the fair means sum(s^l)
    Rat mu = expected_waiting(u, BiasVector::fair(s));
    Rat mv = expected_waiting(v, BiasVector::fair(s));
    if ((verdict.kind == Dominance::FirstDominates) != (mu > mv))
        throw std::logic_error("fair lex rule disagrees with means");
    return verdict;
}

DominanceVerdict compare_biased(const Word& u, const Word& v, const BiasVector& bias, int horizon) {
    WaitingLaw lu = waiting_law(u, bias, horizon);
    WaitingLaw lv = waiting_law(v, bias, horizon);
    int first_above = -1, first_below = -1;  // S_u > S_v / S_u < S_v
    for (int n = 0; n <= horizon; ++n) {
        if (first_above < 0 && lu.S[n] > lv.S[n]) first_above = n;
        if (first_below < 0 && lu.S[n] < lv.S[n]) first_below = n;
        if (first_above >= 0 && first_below >= 0) break;
    }
    DominanceVerdict verdict;
    verdict.horizon = horizon;
    if (first_above >= 0 && first_below >= 0) {
        verdict.kind = Dominance::Incomparable;
        verdict.certified = true;  // two exact strict tails are a certificate
        verdict.n_lo = std::min(first_above, first_below);
        verdict.n_hi = std::max(first_above, first_below);
        verdict.tail_first_lo = lu.S[verdict.n_lo];
        verdict.tail_second_lo = lv.S[verdict.n_lo];
        verdict.tail_first_hi = lu.S[verdict.n_hi];
        verdict.tail_second_hi = lv.S[verdict.n_hi];
        return verdict;
    }
    if (profile(u) == profile(v)) {
        verdict.kind = Dominance::Equivalent;
        verdict.certified = true;
        verdict.certificate = "profile";
        return verdict;
    }
    if (bias.is_fair()) {
        DominanceVerdict fair = compare_fair(u, v, bias.size());
        fair.horizon = horizon;
        return fair;
    }
    if (is_substring(u, v) && first_above < 0) {
        // tau_u <= tau_v on every path, so the second pattern dominates
        verdict.kind = Dominance::SecondDominates;
        verdict.certified = true;
        verdict.certificate = "substring";
        return verdict;
    }
    if (is_substring(v, u) && first_below < 0) {
        verdict.kind = Dominance::FirstDominates;
        verdict.certified = true;
        verdict.certificate = "substring";
        return verdict;
    }
    verdict.kind = Dominance::ConsistentUpTo;
    verdict.certified = false;
    verdict.leaning = first_above >= 0 ? +1 : (first_below >= 0 ? -1 : 0);
    return verdict;
}

IncomparabilityWitness incomparability_witness(const Rat& p) {
    if (sign(p) <= 0 || p >= 1)
        throw DomainError("BadBias", "bias must lie strictly inside (0,1)");
    if (p == make_rat(1, 2))
        throw DomainError("FairCoin", "no incomparable pair exists at the fair coin");
    const bool heads_rich = p > make_rat(1, 2);
    // work with r = max(p, 1-p); smallest n >= 2 with r^n < 1 - r
    Rat r = heads_rich ? p : Rat(1 - p);
    Rat q(1 - r);
    int n = 2;
    Rat rn(r * r);
    while (rn >= q) {
        rn *= r;
        ++n;
    }
    uint8_t run_letter = heads_rich ? 0 : 1;
    uint8_t odd_letter = static_cast<uint8_t>(1 - run_letter);
    IncomparabilityWitness w;
    w.n = n;
    w.first.alphabet_size = w.second.alphabet_size = 2;
    w.first.symbols.assign(n, run_letter);
    w.second.symbols.assign(n, run_letter);
    w.second.symbols.back() = odd_letter;

    // the constructed pair must check out as incomparable
    BiasVector bias = BiasVector::coin(p);
    Rat mean_first = expected_waiting(w.first, bias);
    Rat mean_second = expected_waiting(w.second, bias);
    if (!(mean_first > mean_second)) throw std::logic_error("witness means are not reversed");
    int horizon = 4 * n + 64;
    for (int round = 0; round < 16; ++round, horizon *= 2) {
        DominanceVerdict verdict = compare_biased(w.first, w.second, bias, horizon);
        if (verdict.kind == Dominance::Incomparable) return w;
    }
    throw std::logic_error("witness verification exceeded the horizon cap");
}

}  // namespace penney
