#pragma once

#include <optional>
#include <vector>

#include "penney/algebraic.hpp"
#include "penney/waiting.hpp"
#include "penney/words.hpp"

namespace penney {

enum class TieConvention { Strict, FavourFirst, RandomTieBreak };

TieConvention tie_from_string(const std::string& name);
std::string tie_to_string(TieConvention conv);

/// KMP prefix automaton; states 0..L-1 are matched-prefix lengths and L is
/// the hit.
struct PrefixAutomaton {
    explicit PrefixAutomaton(const Word& word);
    int next(int state, uint8_t letter) const;
    int states() const { return static_cast<int>(w.symbols.size()); }
    Word w;
    std::vector<int> fail;
};

/// Exact outcome split of a two-player race from the joint start state.
struct RaceResult {
    Rat p_first_strict, p_second_strict, p_tie;
    Rat first_wins(TieConvention conv) const {
        switch (conv) {
            case TieConvention::Strict: return p_first_strict;
            case TieConvention::FavourFirst: return Rat(p_first_strict + p_tie);
            default: return Rat(p_first_strict + p_tie / 2);
        }
    }
    Rat rtb_first() const { return first_wins(TieConvention::RandomTieBreak); }
};

/// Absorption probabilities of the joint prefix chain (one toss per player
/// per round), solved exactly. Players may use different alphabets/biases;
/// each bias must be positive on its own pattern's letters.
RaceResult race_exact(const Word& u, const Word& v, const BiasVector& bias_u,
                      const BiasVector& bias_v);

struct RatInterval {
    Rat lo, hi;
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    Rat width() const { return Rat(hi - lo); }
};

/// Certified enclosure of the convention's win probability from truncated
/// Hadamard series: [partial sum, partial sum + S_u(N) * S_v(N)].
RatInterval race_hadamard_bounds(const Word& u, const Word& v, const BiasVector& bias_u,
                                 const BiasVector& bias_v, TieConvention conv, int n);

/// W(u beats v; p) for a common coin bias p, as a reduced rational function,
/// reconstructed from exact chain solves at rational sample points and
/// verified at held-out points.
RatFunc symbolic_odds(const Word& u, const Word& v, TieConvention conv);

/// g_{u,v}(p) = W_rtb(u beats v; p) - 1/2, plus the pair's border sums.
struct AdvantageFunction {
    Word first, second;
    RatFunc g;
    int border_sum_first = 0, border_sum_second = 0;
};
AdvantageFunction advantage_function(const Word& u, const Word& v);

enum class EndpointKind { LimitOne, LimitZero, LimitHalf };

struct EndpointVerdict {
    EndpointKind kind;
    int side_sign;  // exact sign of g on a certified root-free margin
};

struct CrossoverReport {
    std::vector<AlgebraicNumber> roots;  // zeros of g in (0,1), ascending
    EndpointVerdict at_zero, at_one;
};

/// Throws DomainError("IdenticallyHalf") when g vanishes identically.
CrossoverReport crossovers(const Word& u, const Word& v);

struct CriticalPoint {
    AlgebraicNumber location;
    RatInterval value;  // certified enclosure of W at the critical point
    int kind;           // +1 local max, -1 local min, 0 neither
};

/// Critical points of W(u beats v; p) on (0,1).
/// Throws DomainError("ConstantFunction") when W does not depend on p.
std::vector<CriticalPoint> critical_points(const Word& u, const Word& v,
                                           TieConvention conv = TieConvention::RandomTieBreak);

/// Finite waiting-time distribution on positive integers.
struct DiscreteLaw {
    std::vector<std::pair<Int, Rat>> mass;  // (time, probability), times increasing
};

struct DiscreteRaceResult {
    std::vector<std::vector<Rat>> rtb, strict, tie;  // pairwise, i beats j
    std::vector<Rat> simultaneous;                   // uniform split of k-way ties
};

DiscreteRaceResult race_discrete(const std::vector<DiscreteLaw>& laws);

/// Chain solve mod p at a common coin bias x (both players); used by the
/// reconstruction driver. Returns the convention's win value mod p, or
/// nullopt when the chain degenerates mod p.
std::optional<uint64_t> race_mod(const Word& u, const Word& v, TieConvention conv, const Rat& x,
                                 uint64_t p);

}  // namespace penney
