#include "penney/race.hpp"

#include <array>

#include "penney/modular.hpp"

namespace penney {

TieConvention tie_from_string(const std::string& name) {
    if (name == "strict") return TieConvention::Strict;
    if (name == "first" || name == "favour-first" || name == "favor-first")
        return TieConvention::FavourFirst;
    if (name == "random" || name == "rtb") return TieConvention::RandomTieBreak;
    throw DomainError("BadTieConvention", "unknown tie convention '" + name + "'");
}

std::string tie_to_string(TieConvention conv) {
    switch (conv) {
        case TieConvention::Strict: return "strict";
        case TieConvention::FavourFirst: return "favour-first";
        default: return "random";
    }
}

PrefixAutomaton::PrefixAutomaton(const Word& word) : w(word) {
    const int L = w.length();
    fail.assign(L, 0);
    for (int i = 1; i < L; ++i) {
        int k = fail[i - 1];
        while (k > 0 && w.symbols[i] != w.symbols[k]) k = fail[k - 1];
        if (w.symbols[i] == w.symbols[k]) ++k;
        fail[i] = k;
    }
}

int PrefixAutomaton::next(int state, uint8_t letter) const {
    const int L = w.length();
    while (true) {
        if (state < L && w.symbols[state] == letter) return state + 1;
        if (state == 0) return 0;
        state = fail[state - 1];
    }
}

namespace {

void check_own_support(const Word& w, const BiasVector& bias) {
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

// forward elimination (Bareiss, fraction-free) + rational back substitution;
// solves A x = b for every augmented column
std::vector<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> aug, int n, int nrhs) {
    // clear denominators row by row
    std::vector<std::vector<Int>> m(n);
    for (int i = 0; i < n; ++i) {
        Int lcm(1);
        for (const auto& v : aug[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rat_den(v).get_mpz_t());
        m[i].resize(n + nrhs);
        for (int j = 0; j < n + nrhs; ++j) m[i][j] = rat_num(aug[i][j]) * Int(lcm / rat_den(aug[i][j]));
    }
    Int prev(1);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) throw std::logic_error("solve_exact: singular matrix");
        if (piv != k) std::swap(m[piv], m[k]);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n + nrhs; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    std::vector<std::vector<Rat>> xs(nrhs, std::vector<Rat>(n));
    for (int c = 0; c < nrhs; ++c) {
        for (int i = n - 1; i >= 0; --i) {
            Rat acc(m[i][n + c]);
            for (int j = i + 1; j < n; ++j) acc -= Rat(m[i][j]) * xs[c][j];
            xs[c][i] = Rat(acc / Rat(m[i][i]));
        }
    }
    return xs;
}

struct Chain {
    int n = 0;
    std::vector<std::vector<Rat>> rows;  // (I - Q) augmented later
    std::vector<std::array<Rat, 3>> absorb;
};

Chain build_chain(const Word& u, const Word& v, const BiasVector& bu, const BiasVector& bv) {
    check_own_support(u, bu);
    check_own_support(v, bv);
    PrefixAutomaton au(u), av(v);
    const int lu = au.states(), lv = av.states();
    const int n = lu * lv;
    Chain ch;
    ch.n = n;
    ch.rows.assign(n, std::vector<Rat>(n, Rat(0)));
    ch.absorb.assign(n, {Rat(0), Rat(0), Rat(0)});
    for (int i = 0; i < lu; ++i) {
        for (int j = 0; j < lv; ++j) {
            const int s = i * lv + j;
            ch.rows[s][s] += 1;  // I - Q
            for (uint8_t a = 0; a < bu.size(); ++a) {
                if (sign(bu.p[a]) == 0) continue;
                for (uint8_t b = 0; b < bv.size(); ++b) {
                    if (sign(bv.p[b]) == 0) continue;
                    Rat pr(bu.p[a] * bv.p[b]);
                    int ni = au.next(i, a), nj = av.next(j, b);
                    bool hit_u = ni == lu, hit_v = nj == lv;
                    if (hit_u && hit_v) ch.absorb[s][2] += pr;
                    else if (hit_u) ch.absorb[s][0] += pr;
                    else if (hit_v) ch.absorb[s][1] += pr;
                    else ch.rows[s][ni * lv + nj] -= pr;
                }
            }
        }
    }
    return ch;
}

}  // namespace

RaceResult race_exact(const Word& u, const Word& v, const BiasVector& bias_u,
                      const BiasVector& bias_v) {
    Chain ch = build_chain(u, v, bias_u, bias_v);
    std::vector<std::vector<Rat>> aug(ch.n, std::vector<Rat>(ch.n + 3));
    for (int i = 0; i < ch.n; ++i) {
        for (int j = 0; j < ch.n; ++j) aug[i][j] = ch.rows[i][j];
        for (int c = 0; c < 3; ++c) aug[i][ch.n + c] = ch.absorb[i][c];
    }
    auto xs = solve_exact(std::move(aug), ch.n, 3);
    return RaceResult{xs[0][0], xs[1][0], xs[2][0]};
}

RatInterval race_hadamard_bounds(const Word& u, const Word& v, const BiasVector& bias_u,
                                 const BiasVector& bias_v, TieConvention conv, int n) {
    if (n < std::max(u.length(), v.length()))
        throw DomainError("BadHorizon", "truncation order below the longer pattern");
    WaitingLaw lu = waiting_law(u, bias_u, n);
    WaitingLaw lv = waiting_law(v, bias_v, n);
    Rat lower(0);
    for (int t = 1; t <= n; ++t) {
        if (sign(lu.a[t]) == 0) continue;
        Rat weight;
        switch (conv) {
            case TieConvention::Strict: weight = lv.S[t]; break;
            case TieConvention::FavourFirst: weight = lv.S[t - 1]; break;
            default: weight = Rat(lv.S[t] + lv.a[t] / 2); break;
        }
        lower += lu.a[t] * weight;
    }
    Rat tail(lu.S[n] * lv.S[n]);
    return RatInterval{lower, Rat(lower + tail)};
}

std::optional<uint64_t> race_mod(const Word& u, const Word& v, TieConvention conv, const Rat& x,
                                 uint64_t p) {
    using namespace modular;
    auto xm = rat_mod(x, p);
    if (!xm) return std::nullopt;
    PrefixAutomaton au(u), av(v);
    const int lu = au.states(), lv = av.states();
    const int n = lu * lv;
    uint64_t ph = *xm, pt = sub_mod(1 % p, *xm, p);
    std::array<uint64_t, 2> prob{ph, pt};
    // rows of [I - Q | W1 D]
    std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(n + 2, 0));
    for (int i = 0; i < lu; ++i) {
        for (int j = 0; j < lv; ++j) {
            const int s = i * lv + j;
            m[s][s] = add_mod(m[s][s], 1, p);
            for (uint8_t a = 0; a < 2; ++a) {
                for (uint8_t b = 0; b < 2; ++b) {
                    uint64_t pr = mul_mod(prob[a], prob[b], p);
                    int ni = au.next(i, a), nj = av.next(j, b);
                    bool hit_u = ni == lu, hit_v = nj == lv;
                    if (hit_u && hit_v) m[s][n + 1] = add_mod(m[s][n + 1], pr, p);
                    else if (hit_u) m[s][n] = add_mod(m[s][n], pr, p);
                    else if (hit_v) continue;
                    else m[s][ni * lv + nj] = sub_mod(m[s][ni * lv + nj], pr, p);
                }
            }
        }
    }
    // Gaussian elimination mod p
    for (int k = 0; k < n; ++k) {
        int piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return std::nullopt;  // singular image
        if (piv != k) std::swap(m[piv], m[k]);
        uint64_t inv = inv_mod(m[k][k], p);
        for (int j = k; j < n + 2; ++j) m[k][j] = mul_mod(m[k][j], inv, p);
        for (int i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            uint64_t f = m[i][k];
            for (int j = k; j < n + 2; ++j) m[i][j] = sub_mod(m[i][j], mul_mod(f, m[k][j], p), p);
        }
    }
    uint64_t w1 = m[0][n], d = m[0][n + 1];
    switch (conv) {
        case TieConvention::Strict: return w1;
        case TieConvention::FavourFirst: return add_mod(w1, d, p);
        default: return add_mod(w1, mul_mod(d, inv_mod(2, p), p), p);
    }
}

namespace {

// roots of f in the open unit interval, counted by Sturm after deflating
// endpoint roots
int unit_interval_root_count(const ZPoly& f) {
    ZPoly ps = squarefree_part(f);
    for (const Rat& e : {Rat(0), Rat(1)}) {
        while (ps.degree() >= 1 && ps.sign_at(e) == 0)
            ps = divexact(ps, ZPoly(std::vector<Int>{Int(-rat_num(e)), rat_den(e)}));
    }
    if (ps.degree() < 1) return 0;
    return SturmChain(ps).count_open(Rat(0), Rat(1));
}

}  // namespace

RatFunc symbolic_odds(const Word& u, const Word& v, TieConvention conv) {
    if (u.alphabet_size != 2 || v.alphabet_size != 2)
        throw DomainError("BadAlphabet", "symbolic odds require the coin alphabet");
    if (conv == TieConvention::RandomTieBreak && profile(u) == profile(v))
        return RatFunc(ZPoly{1}, ZPoly{2});  // identical laws tie-break to 1/2
    const int s = border_sum(u) + border_sum(v);
    auto eval = [&](const Rat& x, uint64_t p) { return race_mod(u, v, conv, x, p); };
    // the border-sum ladder from the Hadamard degree analysis, topped by the
    // chain-determinant bound 2*L_u*L_v, which is always sufficient: the odds
    // are a ratio of cofactor sums of an (L_u*L_v)-state matrix whose entries
    // have degree <= 2 in the bias
    std::vector<int> ladder{s, 2 * s, 4 * s};
    int det_bound = 2 * u.length() * v.length();
    if (det_bound > ladder.back()) ladder.push_back(det_bound);
    for (int bound : ladder) {
        const int m = 2 * bound + 2;
        const long q = 2 * bound + 5;
        std::vector<Rat> xs;
        xs.reserve(m);
        for (int k = 1; k <= m; ++k) xs.push_back(make_rat(k, q));
        auto cand = modular::reconstruct_ratfunc(eval, xs, bound, bound);
        if (!cand) continue;
        // exact verification at held-out rational points
        const long hq = 2 * bound + 7;
        bool ok = true;
        for (int k = 1; k <= 3 && ok; ++k) {
            Rat x = make_rat(k, hq);
            BiasVector bias = BiasVector::coin(x);
            Rat exact = race_exact(u, v, bias, bias).first_wins(conv);
            ok = cand->den().sign_at(x) != 0 && cand->eval(x) == exact;
        }
        if (!ok) continue;
        return *cand;
    }
    throw DomainError("ReconstructionFailed",
                      "no rational function of degree <= " + std::to_string(std::max(4 * s, 2 * u.length() * v.length())) + " fits " +
                          u.to_string() + " vs " + v.to_string() + "; signals an implementation bug");
}

AdvantageFunction advantage_function(const Word& u, const Word& v) {
    RatFunc w = symbolic_odds(u, v, TieConvention::RandomTieBreak);
    RatFunc g = w - RatFunc::from_rat(make_rat(1, 2));
    if (unit_interval_root_count(g.den()) != 0)
        throw std::logic_error("advantage denominator vanishes inside (0,1)");
    return AdvantageFunction{u, v, std::move(g), border_sum(u), border_sum(v)};
}

namespace {

EndpointVerdict classify_endpoint(int cu, int cv, int len_u, int len_v, int side_sign) {
    EndpointKind kind;
    if (cu < cv) kind = EndpointKind::LimitOne;
    else if (cu > cv) kind = EndpointKind::LimitZero;
    else if (cu >= 1) kind = EndpointKind::LimitHalf;
    else if (len_u < len_v) kind = EndpointKind::LimitOne;
    else if (len_u > len_v) kind = EndpointKind::LimitZero;
    else kind = EndpointKind::LimitHalf;
    return EndpointVerdict{kind, side_sign};
}

}  // namespace

CrossoverReport crossovers(const Word& u, const Word& v) {
    AdvantageFunction adv = advantage_function(u, v);
    if (adv.g.is_zero())
        throw DomainError("IdenticallyHalf", u.to_string() + " and " + v.to_string() +
                                                 " race to exactly 1/2 at every bias");
    CrossoverReport rep;
    rep.roots = isolate_real_roots(adv.g.num(), Rat(0), Rat(1));
    for (auto& r : rep.roots)
        while (!(r.lo() > 0 && r.hi() < 1)) r.refine_step();
    Rat margin0 = make_rat(1, 1000);
    Rat margin1 = make_rat(999, 1000);
    if (!rep.roots.empty()) {
        margin0 = std::min(margin0, Rat(rep.roots.front().lo() / 2));
        margin1 = std::max(margin1, Rat((rep.roots.back().hi() + 1) / 2));
    }
    rep.at_zero = classify_endpoint(u.heads(), v.heads(), u.length(), v.length(),
                                    adv.g.sign_at(margin0));
    rep.at_one = classify_endpoint(u.tails(), v.tails(), u.length(), v.length(),
                                   adv.g.sign_at(margin1));
    return rep;
}

namespace {

RatInterval interval_eval(const ZPoly& f, const Rat& lo, const Rat& hi) {
    // Horner over intervals; x > 0 assumed (callers stay inside (0,1))
    Rat alo(0), ahi(0);
    for (int i = f.degree(); i >= 0; --i) {
        Rat c1(alo * lo), c2(alo * hi), c3(ahi * lo), c4(ahi * hi);
        Rat nlo = std::min(std::min(c1, c2), std::min(c3, c4));
        Rat nhi = std::max(std::max(c1, c2), std::max(c3, c4));
        alo = Rat(nlo + f[i]);
        ahi = Rat(nhi + f[i]);
    }
    return RatInterval{alo, ahi};
}

}  // namespace

std::vector<CriticalPoint> critical_points(const Word& u, const Word& v, TieConvention conv) {
    RatFunc w = symbolic_odds(u, v, conv);
    ZPoly c = w.derivative_num();
    if (c.is_zero())
        throw DomainError("ConstantFunction", "win probability of " + u.to_string() + " vs " +
                                                  v.to_string() + " does not depend on the bias");
    std::vector<CriticalPoint> out;
    Rat target_width = make_rat(Int(1), int_pow(Int(2), 40));
    for (auto& root : isolate_real_roots(c, Rat(0), Rat(1))) {
        while (!(root.lo() > 0 && root.hi() < 1)) root.refine_step();
        int s_lo = c.sign_at(root.lo());
        int s_hi = c.sign_at(root.hi());
        int kind = 0;
        if (s_lo > 0 && s_hi < 0) kind = +1;
        else if (s_lo < 0 && s_hi > 0) kind = -1;
        root.refine_to(target_width);
        RatInterval num_iv = interval_eval(w.num(), root.lo(), root.hi());
        RatInterval den_iv = interval_eval(w.den(), root.lo(), root.hi());
        while (sign(den_iv.lo) * sign(den_iv.hi) <= 0) {
            root.refine_step();
            num_iv = interval_eval(w.num(), root.lo(), root.hi());
            den_iv = interval_eval(w.den(), root.lo(), root.hi());
        }
        Rat q1(num_iv.lo / den_iv.lo), q2(num_iv.lo / den_iv.hi);
        Rat q3(num_iv.hi / den_iv.lo), q4(num_iv.hi / den_iv.hi);
        RatInterval val{std::min(std::min(q1, q2), std::min(q3, q4)),
                        std::max(std::max(q1, q2), std::max(q3, q4))};
        out.push_back(CriticalPoint{std::move(root), std::move(val), kind});
    }
    return out;
}

DiscreteRaceResult race_discrete(const std::vector<DiscreteLaw>& laws) {
    const size_t k = laws.size();
    for (const auto& law : laws) {
        Rat total(0);
        Int prev(0);
        for (const auto& [t, m] : law.mass) {
            if (t <= prev) throw DomainError("BadLaw", "times must be positive and increasing");
            if (sign(m) < 0) throw DomainError("BadLaw", "negative mass");
            prev = t;
            total += m;
        }
        if (total != 1) throw DomainError("BadLaw", "masses must sum to 1, got " + rat_to_string(total));
    }
    DiscreteRaceResult res;
    res.rtb.assign(k, std::vector<Rat>(k, Rat(0)));
    res.strict.assign(k, std::vector<Rat>(k, Rat(0)));
    res.tie.assign(k, std::vector<Rat>(k, Rat(0)));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            Rat win(0), tie(0);
            for (const auto& [ti, mi] : laws[i].mass) {
                for (const auto& [tj, mj] : laws[j].mass) {
                    if (ti < tj) win += mi * mj;
                    else if (ti == tj) tie += mi * mj;
                }
            }
            res.strict[i][j] = win;
            res.tie[i][j] = tie;
            res.rtb[i][j] = Rat(win + tie / 2);
        }
    }
    // simultaneous race with uniform split of multi-way ties
    res.simultaneous.assign(k, Rat(0));
    std::vector<Int> times;
    for (const auto& law : laws)
        for (const auto& [t, _] : law.mass) times.push_back(t);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    auto mass_at = [&](size_t i, const Int& t) {
        for (const auto& [tt, m] : laws[i].mass)
            if (tt == t) return m;
        return Rat(0);
    };
    auto mass_after = [&](size_t i, const Int& t) {
        Rat acc(0);
        for (const auto& [tt, m] : laws[i].mass)
            if (tt > t) acc += m;
        return acc;
    };
    for (const Int& t : times) {
        std::vector<Rat> at(k), after(k);
        for (size_t i = 0; i < k; ++i) {
            at[i] = mass_at(i, t);
            after[i] = mass_after(i, t);
        }
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            Rat pr(1);
            int popcount = 0;
            for (size_t i = 0; i < k; ++i) {
                if (mask & (1u << i)) {
                    pr *= at[i];
                    ++popcount;
                } else {
                    pr *= after[i];
                }
            }
            if (sign(pr) == 0) continue;
            Rat share(pr / popcount);
            for (size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) res.simultaneous[i] += share;
        }
    }
    return res;
}

}  // namespace penney
