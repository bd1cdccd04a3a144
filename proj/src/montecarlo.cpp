#include "penney/montecarlo.hpp"

#include <cmath>

#include "penney/parallel.hpp"

namespace penney {

namespace {

struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// per-trial substream: jump the key far away from neighbouring trials so
// parallel partitions stay order-independent
SplitMix64 substream(uint64_t seed, uint64_t trial) {
    SplitMix64 keyer{seed ^ (0xD1342543DE82EF95ull * (trial + 1))};
    return SplitMix64{keyer.next()};
}

// exact categorical sampling: X uniform on [0, den), letter = least i with
// X < cumulative numerator
struct CategoricalSampler {
    uint64_t den = 0;
    std::vector<uint64_t> cum;
    uint64_t reject_from = 0;  // retries above the largest multiple of den
    bool accept_all = false;

    explicit CategoricalSampler(const BiasVector& bias) {
        Int lcm(1);
        for (const auto& q : bias.p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rat_den(q).get_mpz_t());
        if (!lcm.fits_ulong_p() || mpz_sizeinbase(lcm.get_mpz_t(), 2) > 63)
            throw DomainError("BadBias", "simulation bias denominators exceed 2^63");
        den = lcm.get_ui();
        Int acc(0);
        for (const auto& q : bias.p) {
            acc += rat_num(q) * Int(lcm / rat_den(q));
            cum.push_back(acc.get_ui());
        }
        uint64_t rem = (UINT64_MAX % den + 1) % den;  // 2^64 mod den
        accept_all = rem == 0;
        reject_from = UINT64_MAX - rem + 1;           // largest multiple of den
    }

    uint8_t draw(SplitMix64& rng) const {
        uint64_t r = rng.next();
        while (!accept_all && r >= reject_from) r = rng.next();
        uint64_t x = r % den;
        uint8_t i = 0;
        while (x >= cum[i]) ++i;
        return i;
    }
};

}  // namespace

RaceSim simulate_race(const Word& u, const Word& v, const BiasVector& bias_u,
                      const BiasVector& bias_v, TieConvention conv, const SimConfig& cfg) {
    if (cfg.trials < 1) throw DomainError("BadConfig", "need at least one trial");
    if (cfg.max_steps < static_cast<uint64_t>(std::max(u.length(), v.length())))
        throw DomainError("BadConfig", "max_steps shorter than the patterns");
    PrefixAutomaton au(u), av(v);
    CategoricalSampler su(bias_u), sv(bias_v);
    // own-letter support check mirrors the exact engine
    for (uint8_t l : u.symbols)
        if (sign(bias_u.p[l]) == 0) throw DomainError("ZeroProbabilityLetter", "pattern letter has probability zero");
    for (uint8_t l : v.symbols)
        if (sign(bias_v.p[l]) == 0) throw DomainError("ZeroProbabilityLetter", "pattern letter has probability zero");

    const int lu = au.states(), lv = av.states();
    int threads = std::max(1, cfg.threads);
    size_t chunks = threads == 1 ? 1 : static_cast<size_t>(threads) * 4;
    uint64_t per = cfg.trials / chunks + 1;
    struct Counts {
        uint64_t wins = 0, losses = 0, ties = 0, cutoffs = 0;
    };
    std::vector<Counts> partial(chunks);
    parallel_for(chunks, threads, [&](size_t c) {
        uint64_t begin = c * per, end = std::min<uint64_t>(cfg.trials, (c + 1) * per);
        Counts& k = partial[c];
        for (uint64_t t = begin; t < end; ++t) {
            SplitMix64 rng = substream(cfg.seed, t);
            int pu = 0, pv = 0;
            bool done = false;
            for (uint64_t step = 0; step < cfg.max_steps; ++step) {
                pu = au.next(pu, su.draw(rng));
                pv = av.next(pv, sv.draw(rng));
                bool hu = pu == lu, hv = pv == lv;
                if (hu || hv) {
                    if (hu && hv) ++k.ties;
                    else if (hu) ++k.wins;
                    else ++k.losses;
                    done = true;
                    break;
                }
            }
            if (!done) ++k.cutoffs;
        }
    });
    RaceSim out;
    for (const auto& k : partial) {
        out.wins += k.wins;
        out.losses += k.losses;
        out.ties += k.ties;
        out.cutoffs += k.cutoffs;
    }
    uint64_t eff = out.wins + out.losses + out.ties;
    if (eff == 0) return out;
    double w = static_cast<double>(out.wins), t = static_cast<double>(out.ties);
    double n = static_cast<double>(eff);
    switch (conv) {
        case TieConvention::Strict: out.win_freq = w / n; break;
        case TieConvention::FavourFirst: out.win_freq = (w + t) / n; break;
        default: out.win_freq = (w + 0.5 * t) / n; break;
    }
    out.tie_freq = t / n;
    out.ci99_halfwidth = 2.5758293035489004 * std::sqrt(out.win_freq * (1 - out.win_freq) / n);
    return out;
}

WaitingSim simulate_waiting(const Word& w, const BiasVector& bias, const SimConfig& cfg) {
    if (cfg.trials < 1) throw DomainError("BadConfig", "need at least one trial");
    PrefixAutomaton aut(w);
    CategoricalSampler sampler(bias);
    for (uint8_t l : w.symbols)
        if (sign(bias.p[l]) == 0) throw DomainError("ZeroProbabilityLetter", "pattern letter has probability zero");
    const int L = aut.states();
    int threads = std::max(1, cfg.threads);
    size_t chunks = threads == 1 ? 1 : static_cast<size_t>(threads) * 4;
    uint64_t per = cfg.trials / chunks + 1;
    struct Acc {
        uint64_t completed = 0, cutoffs = 0;
        double sum = 0, sumsq = 0;
        std::array<uint64_t, 33> surv{};
    };
    std::vector<Acc> partial(chunks);
    parallel_for(chunks, threads, [&](size_t c) {
        uint64_t begin = c * per, end = std::min<uint64_t>(cfg.trials, (c + 1) * per);
        Acc& k = partial[c];
        for (uint64_t t = begin; t < end; ++t) {
            SplitMix64 rng = substream(cfg.seed, t);
            int state = 0;
            uint64_t hit = 0;
            for (uint64_t step = 1; step <= cfg.max_steps; ++step) {
                state = aut.next(state, sampler.draw(rng));
                if (state == L) {
                    hit = step;
                    break;
                }
            }
            if (hit == 0) {
                ++k.cutoffs;
                for (auto& s : k.surv) ++s;
                continue;
            }
            ++k.completed;
            double x = static_cast<double>(hit);
            k.sum += x;
            k.sumsq += x * x;
            for (uint64_t n = 0; n < k.surv.size(); ++n)
                if (hit > n) ++k.surv[n];
        }
    });
    WaitingSim out;
    double sum = 0, sumsq = 0;
    for (const auto& k : partial) {
        out.completed += k.completed;
        out.cutoffs += k.cutoffs;
        sum += k.sum;
        sumsq += k.sumsq;
        for (size_t i = 0; i < out.survival_counts.size(); ++i) out.survival_counts[i] += k.surv[i];
    }
    if (out.completed > 0) {
        double n = static_cast<double>(out.completed);
        out.mean = sum / n;
        double var = std::max(0.0, sumsq / n - out.mean * out.mean);
        out.stderr_mean = std::sqrt(var / n);
    }
    return out;
}

}  // namespace penney
