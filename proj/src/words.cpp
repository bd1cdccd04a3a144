#include "penney/words.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace penney {

Word Word::parse(const std::string& text, int alphabet_size) {
    if (alphabet_size < 2 || alphabet_size > 10)
        throw DomainError("BadAlphabet", "alphabet size must be in 2..10 for text patterns");
    if (text.empty()) throw DomainError("BadPattern", "empty pattern");
    Word w;
    w.alphabet_size = alphabet_size;
    bool has_zero = false, has_top = false;
    for (char ch : text) {
        uint8_t v;
        if (alphabet_size == 2 && (ch == 'H' || ch == 'h')) v = 0;
        else if (alphabet_size == 2 && (ch == 'T' || ch == 't')) v = 1;
        else if (ch >= '0' && ch <= '9') v = static_cast<uint8_t>(ch - '0');
        else throw DomainError("BadPattern", std::string("invalid character '") + ch + "'");
        if (v == 0) has_zero = true;
        if (v == alphabet_size) has_top = true;
        else if (v > alphabet_size)
            throw DomainError("BadPattern", "face " + std::to_string(v) + " out of range for alphabet " +
                                                std::to_string(alphabet_size));
        w.symbols.push_back(v);
    }
    if (has_top) {
        // 1-indexed die faces: shift down
        if (has_zero)
            throw DomainError("BadPattern", "face " + std::to_string(alphabet_size) +
                                                " out of range for alphabet " +
                                                std::to_string(alphabet_size));
        for (auto& v : w.symbols) --v;
    }
    return w;
}

std::string Word::to_string() const {
    std::string s;
    for (uint8_t v : symbols) {
        if (alphabet_size == 2) s += (v == 0 ? 'H' : 'T');
        else s += static_cast<char>('0' + v);
    }
    return s;
}

Word Word::reversed() const {
    Word w = *this;
    std::reverse(w.symbols.begin(), w.symbols.end());
    return w;
}

Word Word::complemented() const {
    if (alphabet_size != 2) throw DomainError("BadAlphabet", "complement is a coin operation");
    Word w = *this;
    for (auto& v : w.symbols) v = static_cast<uint8_t>(1 - v);
    return w;
}

std::vector<int> Word::prefix_counts(int len) const {
    std::vector<int> c(alphabet_size, 0);
    for (int i = 0; i < len; ++i) ++c[symbols[i]];
    return c;
}

int Word::heads() const {
    int n = 0;
    for (uint8_t v : symbols)
        if (v == 0) ++n;
    return n;
}

int Word::tails() const { return length() - heads(); }

std::vector<int> borders(const Word& w) {
    const int L = w.length();
    std::vector<int> out;
    for (int l = 1; l <= L; ++l) {
        bool is_border = true;
        for (int i = 0; i < l; ++i) {
            if (w.symbols[i] != w.symbols[L - l + i]) {
                is_border = false;
                break;
            }
        }
        if (is_border) out.push_back(l);
    }
    return out;
}

int border_sum(const Word& w) {
    int s = 0;
    for (int l : borders(w)) s += l;
    return s;
}

Profile profile(const Word& w) {
    Profile p;
    for (int l : borders(w)) p.entries.emplace_back(l, w.prefix_counts(l));
    return p;
}

namespace {

// profile-class table for one (length, alphabet) slice: class key ->
// (lexicographically smallest member, raw count)
using ClassTable = std::map<Profile, std::pair<Word, long>>;

ClassTable build_classes(int len, int s) {
    double total = 1;
    for (int i = 0; i < len; ++i) total *= s;
    if (total > double(1 << 22))
        throw DomainError("PatternTooLong",
                          "canonicalization table for length " + std::to_string(len) +
                              " over " + std::to_string(s) + " letters is too large");
    ClassTable table;
    Word w;
    w.alphabet_size = s;
    w.symbols.assign(len, 0);
    while (true) {
        Profile key = profile(w);
        auto it = table.find(key);
        if (it == table.end()) table.emplace(std::move(key), std::make_pair(w, 1L));
        else {
            ++it->second.second;
            if (w.symbols < it->second.first.symbols) it->second.first = w;
        }
        int i = len - 1;
        while (i >= 0 && w.symbols[i] == s - 1) w.symbols[i--] = 0;
        if (i < 0) break;
        ++w.symbols[i];
    }
    return table;
}

const ClassTable& classes_for(int len, int s) {
    static std::map<std::pair<int, int>, ClassTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(len, s);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_classes(len, s)).first;
    return it->second;
}

}  // namespace

Word canonical_representative(const Word& w) {
    const ClassTable& table = classes_for(w.length(), w.alphabet_size);
    auto it = table.find(profile(w));
    if (it == table.end()) throw std::logic_error("canonical_representative: class table miss");
    return it->second.first;
}

std::vector<Word> enumerate_patterns(int max_len, int s) {
    return enumerate_classes(max_len, s).reps;
}

PatternClasses enumerate_classes(int max_len, int s) {
    if (max_len < 1) throw DomainError("BadLength", "max_len must be at least 1");
    if (s < 2) throw DomainError("BadAlphabet", "alphabet size must be at least 2");
    PatternClasses out;
    for (int len = 1; len <= max_len; ++len) {
        const ClassTable& table = classes_for(len, s);
        std::vector<std::pair<Word, long>> rows;
        rows.reserve(table.size());
        for (const auto& [_, rep] : table) rows.push_back(rep);
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [rep, count] : rows) {
            out.reps.push_back(std::move(rep));
            out.class_sizes.push_back(count);
        }
    }
    return out;
}

}  // namespace penney
