#include "penney/waiting.hpp"

#include <sstream>

namespace penney {

BiasVector BiasVector::fair(int s) {
    if (s < 2) throw DomainError("BadAlphabet", "alphabet size must be at least 2");
    BiasVector b;
    b.p.assign(s, make_rat(1, s));
    return b;
}

BiasVector BiasVector::coin(const Rat& p_heads) {
    return from_entries({p_heads, Rat(1 - p_heads)});
}

BiasVector BiasVector::from_entries(std::vector<Rat> entries) {
    if (entries.size() < 2) throw DomainError("BadBias", "bias vector needs at least two entries");
    Rat sum(0);
    for (const auto& v : entries) {
        if (sign(v) < 0 || v > 1) throw DomainError("BadBias", "bias entries must lie in [0,1]");
        sum += v;
    }
    if (sum != 1) throw DomainError("BadBias", "bias entries must sum to 1 exactly, got " + rat_to_string(sum));
    BiasVector b;
    b.p = std::move(entries);
    return b;
}

std::string BiasVector::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(p[i]);
    }
    return os.str();
}

Rat word_probability(const Word& w, const BiasVector& bias) {
    Rat pr(1);
    for (uint8_t v : w.symbols) pr *= bias.p[v];
    return pr;
}

namespace {

void check_support(const Word& w, const BiasVector& bias) {
    if (bias.size() != w.alphabet_size)
        throw DomainError("BadBias", "bias has " + std::to_string(bias.size()) +
                                         " entries for alphabet size " +
                                         std::to_string(w.alphabet_size));
    for (uint8_t v : w.symbols)
        if (sign(bias.p[v]) == 0)
            throw DomainError("ZeroProbabilityLetter",
                              "letter " + std::to_string(v) + " of pattern " + w.to_string() +
                                  " has probability zero");
}

}  // namespace

WaitingLaw waiting_law(const Word& w, const BiasVector& bias, int horizon) {
    check_support(w, bias);
    const int L = w.length();
    if (horizon < L) throw DomainError("BadHorizon", "horizon must be at least the pattern length");

    WaitingLaw law;
    law.word = w;
    law.bias = bias;
    law.horizon = horizon;

    // h weights and mean
    Rat mean(0);
    for (int l : borders(w)) {
        Rat pr(1);
        for (int i = 0; i < l; ++i) pr *= bias.p[w.symbols[i]];
        Rat weight(1 / pr);
        law.h_weights.emplace_back(l, weight);
        mean += weight;
    }
    law.mean = mean;

    // cleared pgf: num = x^L, den = x^L + (1-x) * sum_l w_l x^(L-l),
    // then scaled to integer coefficients with content 1
    std::vector<Rat> den(L + 1, Rat(0));
    den[L] += 1;
    for (const auto& [l, weight] : law.h_weights) {
        den[L - l] += weight;
        den[L - l + 1] -= weight;
    }
    Int lcm(1);
    for (const auto& c : den) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rat_den(c).get_mpz_t());
    Int gcd(0);
    for (const auto& c : den) {
        Int scaled = rat_num(c) * Int(lcm / rat_den(c));
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat scale = make_rat(lcm, gcd);
    law.pgf_den.c.assign(den.begin(), den.end());
    for (auto& c : law.pgf_den.c) c *= scale;
    law.pgf_den.trim();
    law.pgf_num.c.assign(L + 1, Rat(0));
    law.pgf_num.c[L] = scale;
    law.pgf_num.trim();

    // coefficient recurrence from the cleared denominator:
    // sum_k d_k a_(n-k) = num_n
    const auto& d = law.pgf_den.c;
    law.a.assign(horizon + 1, Rat(0));
    law.S.assign(horizon + 1, Rat(0));
    Rat cum(0);
    law.S[0] = 1;
    for (int n = 1; n <= horizon; ++n) {
        Rat rhs = (n < static_cast<int>(law.pgf_num.c.size())) ? law.pgf_num.c[n] : Rat(0);
        for (int k = 1; k < static_cast<int>(d.size()) && k <= n; ++k) rhs -= d[k] * law.a[n - k];
        law.a[n] = Rat(rhs / d[0]);
        cum += law.a[n];
        law.S[n] = Rat(1 - cum);
    }
    return law;
}

Rat expected_waiting(const Word& w, const BiasVector& bias) {
    check_support(w, bias);
    Rat mean(0);
    for (int l : borders(w)) {
        Rat pr(1);
        for (int i = 0; i < l; ++i) pr *= bias.p[w.symbols[i]];
        mean += 1 / pr;
    }
    return mean;
}

RatFunc mean_symbolic(const Word& w) {
    if (w.alphabet_size != 2)
        throw DomainError("BadAlphabet", "symbolic means are defined for the coin alphabet");
    auto bs = borders(w);
    int hmax = 0, tmax = 0;
    std::vector<std::pair<int, int>> counts;  // (heads, tails) per border prefix
    for (int l : bs) {
        auto c = w.prefix_counts(l);
        counts.emplace_back(c[0], c[1]);
        hmax = std::max(hmax, c[0]);
        tmax = std::max(tmax, c[1]);
    }
    ZPoly num;
    ZPoly p = ZPoly{0, 1}, one_minus_p = ZPoly{1, -1};
    auto power = [](const ZPoly& b, int e) {
        ZPoly r{1};
        for (int i = 0; i < e; ++i) r = r * b;
        return r;
    };
    for (const auto& [h, t] : counts) num = num + power(p, hmax - h) * power(one_minus_p, tmax - t);
    ZPoly den = power(p, hmax) * power(one_minus_p, tmax);
    return RatFunc(num, den);
}

int default_horizon(const Word& w, const BiasVector& bias) {
    check_support(w, bias);
    Rat pmin(1);
    for (uint8_t v : w.symbols) pmin = std::min(pmin, bias.p[v]);
    Int inv_ceil;
    mpz_cdiv_q(inv_ceil.get_mpz_t(), rat_den(pmin).get_mpz_t(), rat_num(pmin).get_mpz_t());
    Int n = Int(8 * w.length()) * inv_ceil;
    if (n < 64) return 64;
    if (n > 1000000) throw DomainError("BadHorizon", "default horizon exceeds 10^6; pass one explicitly");
    return static_cast<int>(n.get_si());
}

}  // namespace penney
