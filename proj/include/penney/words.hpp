#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "penney/rational.hpp"

namespace penney {

/// Pattern over the alphabet {0, ..., s-1}. For coins (s = 2) the letter 0
/// is H and 1 is T.
struct Word {
    std::vector<uint8_t> symbols;
    int alphabet_size = 2;

    int length() const { return static_cast<int>(symbols.size()); }

    /// Accepts H/T (s = 2, where 0/1 are also allowed) or digit faces
    /// 0..s-1. Dice written with faces 1..s (no zero anywhere, face `s`
    /// present) are shifted down to 0..s-1.
    static Word parse(const std::string& text, int alphabet_size);

    std::string to_string() const;
    Word reversed() const;
    /// Coin complement H <-> T.
    Word complemented() const;

    /// Letter counts of the prefix of the given length.
    std::vector<int> prefix_counts(int len) const;
    /// Number of 0s (heads) / 1s (tails); coin convenience.
    int heads() const;
    int tails() const;

    bool operator==(const Word& o) const {
        return alphabet_size == o.alphabet_size && symbols == o.symbols;
    }
    bool operator<(const Word& o) const {
        if (symbols.size() != o.symbols.size()) return symbols.size() < o.symbols.size();
        return symbols < o.symbols;
    }
};

/// Border lengths of w (prefix = suffix), strictly increasing, always
/// containing |w|.
std::vector<int> borders(const Word& w);

/// Border sum S_w = sum of border lengths.
int border_sum(const Word& w);

/// The waiting-time profile: each border length together with the letter
/// counts of that prefix. Words with equal profiles have identical
/// first-hit laws at every bias.
struct Profile {
    std::vector<std::pair<int, std::vector<int>>> entries;  // ascending by length
    bool operator==(const Profile& o) const { return entries == o.entries; }
    bool operator<(const Profile& o) const { return entries < o.entries; }
};

Profile profile(const Word& w);

/// Lexicographically smallest word of the same length with the same profile
/// (reversal classes collapse into profile classes automatically).
Word canonical_representative(const Word& w);

/// One canonical representative per profile class, all lengths 1..max_len,
/// sorted by (length, lexicographic).
std::vector<Word> enumerate_patterns(int max_len, int s);

/// Representatives plus the number of raw words in each class; the raw
/// multiplicities drive the reversal-census counting convention.
struct PatternClasses {
    std::vector<Word> reps;
    std::vector<long> class_sizes;
};
PatternClasses enumerate_classes(int max_len, int s);

}  // namespace penney
