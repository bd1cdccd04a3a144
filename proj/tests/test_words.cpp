#include "doctest.h"
#include "penney/words.hpp"

#include <map>
#include <set>

using namespace penney;

namespace {

Word W(const char* s, int alpha = 2) { return Word::parse(s, alpha); }

// independent brute-force grouping oracle: border set via direct substring
// comparison, keyed together with per-border letter counts
using OracleKey = std::vector<std::vector<int>>;

OracleKey oracle_key(const std::vector<uint8_t>& w, int s) {
    OracleKey key;
    const int L = static_cast<int>(w.size());
    for (int l = 1; l <= L; ++l) {
        bool border = std::equal(w.begin(), w.begin() + l, w.end() - l);
        if (!border) continue;
        std::vector<int> row(s + 1, 0);
        row[0] = l;
        for (int i = 0; i < l; ++i) ++row[1 + w[i]];
        key.push_back(row);
    }
    return key;
}

long oracle_class_count(int max_len, int s) {
    long classes = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::set<OracleKey> seen;
        std::vector<uint8_t> w(len, 0);
        while (true) {
            seen.insert(oracle_key(w, s));
            int i = len - 1;
            while (i >= 0 && w[i] == s - 1) w[i--] = 0;
            if (i < 0) break;
            ++w[i];
        }
        classes += static_cast<long>(seen.size());
    }
    return classes;
}

}  // namespace

TEST_CASE("borders") {
    CHECK(borders(W("HTHT")) == std::vector<int>{2, 4});
    CHECK(borders(W("HH")) == std::vector<int>{1, 2});
    CHECK(borders(W("H")) == std::vector<int>{1});
    CHECK(borders(W("HT")) == std::vector<int>{2});
    CHECK(borders(W("13166131", 6)) == std::vector<int>{1, 3, 8});
    CHECK(border_sum(W("HH")) == 3);
    CHECK(border_sum(W("HT")) == 2);
}

TEST_CASE("parsing surfaces") {
    CHECK(W("01") == W("HT"));
    CHECK(W("ht") == W("HT"));
    // dice written 1..s shift down to 0..s-1
    Word die = Word::parse("13166131", 6);
    CHECK(die.symbols == std::vector<uint8_t>{0, 2, 0, 5, 5, 0, 2, 0});
    // plain 0-indexed when no face equals s
    CHECK(Word::parse("0205", 6).symbols == std::vector<uint8_t>{0, 2, 0, 5});
    CHECK_THROWS_AS(Word::parse("7", 6), DomainError);
    CHECK_THROWS_AS(Word::parse("06", 6), DomainError);
    CHECK_THROWS_AS(Word::parse("HX", 2), DomainError);
    CHECK_THROWS_AS(Word::parse("", 2), DomainError);
}

TEST_CASE("canonical representatives") {
    CHECK(canonical_representative(W("HT")) == canonical_representative(W("TH")));
    CHECK(canonical_representative(W("HHT")) == canonical_representative(W("THH")));
    CHECK(canonical_representative(W("HH")) == W("HH"));
    CHECK(canonical_representative(W("TH")) == W("HT"));
}

TEST_CASE("profile preserved under reversal") {
    for (int len = 1; len <= 6; ++len) {
        std::vector<uint8_t> w(len, 0);
        while (true) {
            Word a;
            a.alphabet_size = 2;
            a.symbols = w;
            CHECK(profile(a) == profile(a.reversed()));
            int i = len - 1;
            while (i >= 0 && w[i] == 1) w[i--] = 0;
            if (i < 0) break;
            ++w[i];
        }
    }
}

TEST_CASE("enumerate_patterns matches the brute-force oracle") {
    auto len1 = enumerate_patterns(1, 2);
    REQUIRE(len1.size() == 2);
    CHECK(len1[0] == W("H"));
    CHECK(len1[1] == W("T"));

    // length 2 collapses HT and TH: 3 classes there
    auto len2 = enumerate_patterns(2, 2);
    CHECK(len2.size() == 5);
    CHECK(oracle_class_count(2, 2) == 5);

    CHECK(static_cast<long>(enumerate_patterns(5, 2).size()) == oracle_class_count(5, 2));
    CHECK(static_cast<long>(enumerate_patterns(4, 3).size()) == oracle_class_count(4, 3));
}

TEST_CASE("class sizes cover the raw words") {
    for (int max_len : {3, 5}) {
        auto classes = enumerate_classes(max_len, 2);
        long total = 0;
        for (long n : classes.class_sizes) total += n;
        long raw = 0;
        for (int len = 1; len <= max_len; ++len) raw += 1L << len;
        CHECK(total == raw);
        // representatives are canonical and profile classes disjoint
        std::set<std::vector<uint8_t>> seen;
        for (const auto& rep : classes.reps) {
            CHECK(canonical_representative(rep) == rep);
            CHECK(seen.insert(rep.symbols).second);
        }
    }
}

TEST_CASE("complementing symbols swaps the per-border letter counts") {
    for (const char* s : {"H", "HT", "HHT", "HTHT", "THHTT"}) {
        Word w = W(s);
        Profile p = profile(w), pc = profile(w.complemented());
        REQUIRE(p.entries.size() == pc.entries.size());
        for (size_t k = 0; k < p.entries.size(); ++k) {
            CHECK(p.entries[k].first == pc.entries[k].first);
            CHECK(p.entries[k].second[0] == pc.entries[k].second[1]);
            CHECK(p.entries[k].second[1] == pc.entries[k].second[0]);
        }
    }
}
