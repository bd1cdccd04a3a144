#include "penney.h"
#include <sstream>

#include <cstring>
#include <fstream>

#include "penney/census.hpp"
#include "penney/dominance.hpp"
#include "penney/json_io.hpp"
#include "penney/montecarlo.hpp"
#include "penney/parallel.hpp"

using namespace penney;

struct penney_ctx {
    std::string last_error;
    int threads = default_threads();
    int horizon = 0;  // 0 = per-pattern default
    std::string db_path;
    uint64_t trials = 100000;
    uint64_t seed = 1;
    uint64_t max_steps = 1000000;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(penney_ctx* ctx, int code, const std::string& message) {
    if (ctx) ctx->last_error = message;
    return code;
}

template <typename Fn>
int guarded(penney_ctx* ctx, char** out_json, Fn&& fn) {
    if (!ctx) return PENNEY_EUSAGE;
    if (!out_json) return fail(ctx, PENNEY_EUSAGE, "Usage: missing output pointer");
    *out_json = nullptr;
    try {
        Json j = fn();
        *out_json = dup_string(j.dump());
        if (!*out_json) return fail(ctx, PENNEY_EINTERNAL, "Internal: allocation failure");
        ctx->last_error.clear();
        return PENNEY_OK;
    } catch (const DomainError& e) {
        return fail(ctx, PENNEY_EDOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, PENNEY_EINTERNAL, std::string("Internal: ") + e.what());
    }
}

// bias text: "fair:S", coin fraction/decimal, or comma vector
BiasVector parse_bias(const std::string& text) {
    if (text.rfind("fair:", 0) == 0) {
        int s = std::atoi(text.c_str() + 5);
        if (s < 2) throw DomainError("BadBias", "fair:<s> needs s >= 2");
        return BiasVector::fair(s);
    }
    if (text.find(',') == std::string::npos) return BiasVector::coin(rat_from_string(text));
    std::vector<Rat> entries;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) entries.push_back(rat_from_string(tok));
    return BiasVector::from_entries(std::move(entries));
}

Word parse_pattern(const std::string& text, const BiasVector& bias) {
    return Word::parse(text, bias.size());
}

const char* require(const char* s, const char* what) {
    if (!s) throw DomainError("Usage", std::string("missing ") + what);
    return s;
}

Json endpoint_json(const EndpointVerdict& v) {
    const char* kind = v.kind == EndpointKind::LimitOne ? "limit-one"
                       : v.kind == EndpointKind::LimitZero ? "limit-zero"
                                                           : "limit-half";
    return Json{{"kind", kind}, {"side_sign", v.side_sign}};
}

Json window_json(const std::optional<AlgebraicNumber>& lo, const std::optional<AlgebraicNumber>& hi,
                 const Rat& midpoint) {
    Json j;
    j["lo"] = lo ? algebraic_json(*lo) : Json("0");
    j["hi"] = hi ? algebraic_json(*hi) : Json("1");
    j["midpoint"] = rat_json(midpoint);
    return j;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, sep)) out.push_back(tok);
    return out;
}

}  // namespace

extern "C" {

const char* penney_version(void) { return "penney 1.0.0"; }

penney_ctx* penney_ctx_new(void) { return new (std::nothrow) penney_ctx; }

void penney_ctx_free(penney_ctx* ctx) { delete ctx; }

int penney_ctx_set(penney_ctx* ctx, const char* key, const char* value) {
    if (!ctx || !key || !value) return PENNEY_EUSAGE;
    std::string k = key;
    try {
        if (k == "threads") ctx->threads = std::max(1, std::atoi(value));
        else if (k == "horizon") ctx->horizon = std::atoi(value);
        else if (k == "db_path") ctx->db_path = value;
        else if (k == "trials") ctx->trials = std::strtoull(value, nullptr, 10);
        else if (k == "seed") ctx->seed = std::strtoull(value, nullptr, 10);
        else if (k == "max_steps") ctx->max_steps = std::strtoull(value, nullptr, 10);
        else return fail(ctx, PENNEY_EUSAGE, "Usage: unknown option '" + k + "'");
    } catch (const std::exception& e) {
        return fail(ctx, PENNEY_EUSAGE, std::string("Usage: ") + e.what());
    }
    ctx->last_error.clear();
    return PENNEY_OK;
}

const char* penney_last_error(const penney_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

void penney_string_free(char* s) { std::free(s); }

int penney_expect(penney_ctx* ctx, const char* pattern, const char* bias, char** out_json) {
    return guarded(ctx, out_json, [&] {
        BiasVector b = parse_bias(require(bias, "bias"));
        Word w = parse_pattern(require(pattern, "pattern"), b);
        Rat mean = expected_waiting(w, b);
        Json j{{"pattern", w.to_string()},
               {"bias", b.to_string()},
               {"borders", borders(w)},
               {"mean", rat_json(mean)}};
        return j;
    });
}

int penney_pgf(penney_ctx* ctx, const char* pattern, const char* bias, int horizon,
               char** out_json) {
    return guarded(ctx, out_json, [&] {
        BiasVector b = parse_bias(require(bias, "bias"));
        Word w = parse_pattern(require(pattern, "pattern"), b);
        int n = horizon > 0 ? horizon : (ctx->horizon > 0 ? ctx->horizon : default_horizon(w, b));
        WaitingLaw law = waiting_law(w, b, n);
        Json weights = Json::array();
        for (const auto& [l, wt] : law.h_weights)
            weights.push_back(Json{{"border", l}, {"weight", rat_to_string(wt)}});
        Json a = Json::array(), s = Json::array();
        for (int t = 0; t <= n; ++t) {
            a.push_back(rat_to_string(law.a[t]));
            s.push_back(rat_to_string(law.S[t]));
        }
        Json num = Json::array(), den = Json::array();
        for (const auto& c : law.pgf_num.c) num.push_back(rat_to_string(c));
        for (const auto& c : law.pgf_den.c) den.push_back(rat_to_string(c));
        return Json{{"pattern", w.to_string()}, {"bias", b.to_string()},
                    {"horizon", n},             {"mean", rat_json(law.mean)},
                    {"h_weights", weights},     {"pgf", Json{{"num", num}, {"den", den}}},
                    {"hit", a},                 {"survival", s}};
    });
}

int penney_mean_symbolic(penney_ctx* ctx, const char* pattern, char** out_json) {
    return guarded(ctx, out_json, [&] {
        Word w = Word::parse(require(pattern, "pattern"), 2);
        RatFunc mean = mean_symbolic(w);
        return Json{{"pattern", w.to_string()},
                    {"mean", ratfunc_json(mean)},
                    {"display", mean.to_string()}};
    });
}

int penney_race(penney_ctx* ctx, const char* first, const char* second, const char* bias_first,
                const char* bias_second, const char* tie, int hadamard_n, char** out_json) {
    return guarded(ctx, out_json, [&] {
        BiasVector bu = parse_bias(require(bias_first, "first bias"));
        BiasVector bv = parse_bias(require(bias_second, "second bias"));
        Word u = parse_pattern(require(first, "first pattern"), bu);
        Word v = parse_pattern(require(second, "second pattern"), bv);
        TieConvention conv = tie_from_string(tie ? tie : "random");
        RaceResult r = race_exact(u, v, bu, bv);
        Json j = race_result_json(r, conv);
        j["patterns"] = {u.to_string(), v.to_string()};
        j["biases"] = {bu.to_string(), bv.to_string()};
        if (hadamard_n > 0) {
            RatInterval iv = race_hadamard_bounds(u, v, bu, bv, conv, hadamard_n);
            j["hadamard"] = Json{{"n", hadamard_n},
                                 {"lo", rat_to_string(iv.lo)},
                                 {"hi", rat_to_string(iv.hi)},
                                 {"width", approx15(iv.width())}};
        }
        return j;
    });
}

int penney_advantage(penney_ctx* ctx, const char* first, const char* second, char** out_json) {
    return guarded(ctx, out_json, [&] {
        Word u = Word::parse(require(first, "first pattern"), 2);
        Word v = Word::parse(require(second, "second pattern"), 2);
        AdvantageFunction adv = advantage_function(u, v);
        return Json{{"pair", {u.to_string(), v.to_string()}},
                    {"g", ratfunc_json(adv.g)},
                    {"display", adv.g.to_string()},
                    {"identically_half", adv.g.is_zero()},
                    {"border_sums", {adv.border_sum_first, adv.border_sum_second}},
                    {"degrees", {adv.g.num().degree(), adv.g.den().degree()}}};
    });
}

int penney_crossovers(penney_ctx* ctx, const char* first, const char* second, char** out_json) {
    return guarded(ctx, out_json, [&] {
        Word u = Word::parse(require(first, "first pattern"), 2);
        Word v = Word::parse(require(second, "second pattern"), 2);
        CrossoverReport rep = crossovers(u, v);
        Json roots = Json::array();
        for (const auto& r : rep.roots) roots.push_back(algebraic_json(r));
        return Json{{"pair", {u.to_string(), v.to_string()}},
                    {"roots", roots},
                    {"at_zero", endpoint_json(rep.at_zero)},
                    {"at_one", endpoint_json(rep.at_one)}};
    });
}

int penney_critical(penney_ctx* ctx, const char* first, const char* second, const char* tie,
                    char** out_json) {
    return guarded(ctx, out_json, [&] {
        Word u = Word::parse(require(first, "first pattern"), 2);
        Word v = Word::parse(require(second, "second pattern"), 2);
        TieConvention conv = tie_from_string(tie ? tie : "random");
        auto pts = critical_points(u, v, conv);
        Json arr = Json::array();
        for (const auto& p : pts) {
            const char* kind = p.kind > 0 ? "max" : (p.kind < 0 ? "min" : "saddle");
            arr.push_back(Json{{"location", algebraic_json(p.location)},
                               {"value_lo", rat_to_string(p.value.lo)},
                               {"value_hi", rat_to_string(p.value.hi)},
                               {"value_approx", approx15(Rat((p.value.lo + p.value.hi) / 2))},
                               {"kind", kind}});
        }
        return Json{{"pair", {u.to_string(), v.to_string()}},
                    {"convention", tie_to_string(conv)},
                    {"points", arr}};
    });
}

int penney_dominance(penney_ctx* ctx, const char* first, const char* second, const char* bias,
                     int horizon, char** out_json) {
    return guarded(ctx, out_json, [&] {
        BiasVector b = parse_bias(require(bias, "bias"));
        Word u = parse_pattern(require(first, "first pattern"), b);
        Word v = parse_pattern(require(second, "second pattern"), b);
        int n = horizon > 0 ? horizon : 4096;
        DominanceVerdict verdict = compare_biased(u, v, b, n);
        const char* kind = nullptr;
        switch (verdict.kind) {
            case Dominance::FirstDominates: kind = "first-dominates"; break;
            case Dominance::SecondDominates: kind = "second-dominates"; break;
            case Dominance::Equivalent: kind = "equivalent"; break;
            case Dominance::Incomparable: kind = "incomparable"; break;
            case Dominance::ConsistentUpTo: kind = "consistent-up-to"; break;
        }
        Json j{{"pair", {u.to_string(), v.to_string()}},
               {"bias", b.to_string()},
               {"verdict", kind},
               {"certified", verdict.certified},
               {"certificate", verdict.certificate}};
        if (verdict.kind == Dominance::Incomparable) {
            j["witness"] = Json{{"n_lo", verdict.n_lo},
                                {"n_hi", verdict.n_hi},
                                {"tail_first_lo", rat_to_string(verdict.tail_first_lo)},
                                {"tail_second_lo", rat_to_string(verdict.tail_second_lo)},
                                {"tail_first_hi", rat_to_string(verdict.tail_first_hi)},
                                {"tail_second_hi", rat_to_string(verdict.tail_second_hi)}};
        }
        if (verdict.kind == Dominance::ConsistentUpTo) {
            j["horizon"] = verdict.horizon;
            j["leaning"] = verdict.leaning;
        }
        return j;
    });
}

int penney_witness(penney_ctx* ctx, const char* bias, char** out_json) {
    return guarded(ctx, out_json, [&] {
        Rat p = rat_from_string(require(bias, "bias"));
        IncomparabilityWitness w = incomparability_witness(p);
        return Json{{"p", rat_to_string(p)},
                    {"first", w.first.to_string()},
                    {"second", w.second.to_string()},
                    {"n", w.n}};
    });
}

int penney_census_cycles(penney_ctx* ctx, int max_len, char** out_json) {
    return guarded(ctx, out_json, [&] {
        auto families = find_cycle_families(max_len, ctx->db_path, ctx->threads);
        Json arr = Json::array();
        for (const auto& f : families)
            arr.push_back(Json{{"triple",
                                {f.triple[0].to_string(), f.triple[1].to_string(),
                                 f.triple[2].to_string()}},
                               {"window", window_json(f.window_lo, f.window_hi, f.window_midpoint)},
                               {"equivalence", f.equivalence}});
        return Json{{"max_len", max_len}, {"count", families.size()}, {"families", arr}};
    });
}

int penney_census_reversals(penney_ctx* ctx, int max_len, char** out_json) {
    return guarded(ctx, out_json, [&] {
        ReversalCensus census = find_reversal_windows(max_len, ctx->db_path, ctx->threads);
        Json counts = Json::array();
        for (const auto& [key, count] : census.counts_by_length)
            counts.push_back(Json{{"lengths", {key.first, key.second}}, {"count", count}});
        Json windows = Json::array();
        for (const auto& w : census.windows)
            windows.push_back(Json{{"pair", {w.first.to_string(), w.second.to_string()}},
                                   {"window", window_json(w.lo, w.hi, w.midpoint)},
                                   {"multiplicity", w.multiplicity}});
        Json gap;
        gap["lo"] = census.gap_lo ? algebraic_json(*census.gap_lo) : Json("0");
        gap["hi"] = census.gap_hi ? algebraic_json(*census.gap_hi) : Json("1");
        return Json{{"max_len", max_len},
                    {"convention", census.convention},
                    {"total_windows", census.total_windows},
                    {"canonical_windows", census.canonical_windows},
                    {"counts_by_length", counts},
                    {"no_reversal_gap", gap},
                    {"windows", windows}};
    });
}

int penney_verify_cycle(penney_ctx* ctx, const char* patterns_csv, const char* biases_sc,
                        char** out_json) {
    return guarded(ctx, out_json, [&] {
        auto pats = split(require(patterns_csv, "patterns"), ',');
        auto biases = split(require(biases_sc, "biases"), ';');
        if (pats.size() != 3) throw DomainError("BadPatterns", "verify-cycle needs three patterns");
        if (biases.size() == 1) biases = {biases[0], biases[0], biases[0]};
        if (biases.size() != 3) throw DomainError("BadBias", "verify-cycle needs one or three biases");
        std::array<BiasVector, 3> bs{parse_bias(biases[0]), parse_bias(biases[1]),
                                     parse_bias(biases[2])};
        std::array<Word, 3> ws{parse_pattern(pats[0], bs[0]), parse_pattern(pats[1], bs[1]),
                               parse_pattern(pats[2], bs[2])};
        CycleCheck check = verify_cycle_at(ws, bs);
        Json legs = Json::array();
        const char* names[3] = {"first>second", "second>third", "third>first"};
        for (int i = 0; i < 3; ++i) {
            Json leg = race_result_json(check.legs[i], TieConvention::RandomTieBreak);
            leg["leg"] = names[i];
            legs.push_back(std::move(leg));
        }
        return Json{{"triple", {ws[0].to_string(), ws[1].to_string(), ws[2].to_string()}},
                    {"biases", {bs[0].to_string(), bs[1].to_string(), bs[2].to_string()}},
                    {"cycle", check.is_cycle},
                    {"legs", legs}};
    });
}

int penney_scan(penney_ctx* ctx, const char* patterns_csv, const char* mode,
                const char* grid_step, const char* windows, const char* csv_path,
                char** out_json) {
    return guarded(ctx, out_json, [&] {
        ScanMode m = scan_mode_from_string(require(mode, "mode"));
        Rat step = rat_from_string(require(grid_step, "grid step"));
        auto pats = split(require(patterns_csv, "patterns"), ',');
        // alphabet: common_p and per_player are coin scans; simplex patterns
        // carry their own digit alphabet (largest face + 1, at least 2... the
        // bias dimension comes from the patterns)
        std::vector<Word> ws;
        if (m == ScanMode::Simplex) {
            int s = 2;
            for (const auto& p : pats)
                for (char c : p)
                    if (c >= '0' && c <= '9') s = std::max(s, c - '0' + 1);
            for (const auto& p : pats) ws.push_back(Word::parse(p, s));
        } else {
            for (const auto& p : pats) ws.push_back(Word::parse(p, 2));
        }
        ScanOptions opt;
        if (windows && *windows) {
            for (const auto& w : split(windows, ';')) {
                auto bounds = split(w, ':');
                if (bounds.size() != 2)
                    throw DomainError("BadWindow", "axis windows look like lo:hi");
                opt.axis_windows.emplace_back(rat_from_string(bounds[0]),
                                              rat_from_string(bounds[1]));
            }
        }
        std::ofstream csv;
        if (csv_path && *csv_path) {
            csv.open(csv_path);
            if (!csv) throw DomainError("BadPath", std::string("cannot write ") + csv_path);
        }
        ScanSummary summary =
            scan_bias_space(ws, step, m, csv.is_open() ? &csv : nullptr, ctx->threads, opt);
        Json flagged = Json::array();
        for (const auto& row : summary.flagged) flagged.push_back(row);
        Json j{{"mode", mode},
               {"step", rat_to_string(step)},
               {"points", summary.points},
               {"cycle_points", summary.cycle_points},
               {"flagged", flagged}};
        if (csv_path && *csv_path) j["csv"] = csv_path;
        return j;
    });
}

int penney_simulate_race(penney_ctx* ctx, const char* first, const char* second,
                         const char* bias_first, const char* bias_second, const char* tie,
                         uint64_t trials, uint64_t seed, uint64_t max_steps, char** out_json) {
    return guarded(ctx, out_json, [&] {
        BiasVector bu = parse_bias(require(bias_first, "first bias"));
        BiasVector bv = parse_bias(require(bias_second, "second bias"));
        Word u = parse_pattern(require(first, "first pattern"), bu);
        Word v = parse_pattern(require(second, "second pattern"), bv);
        TieConvention conv = tie_from_string(tie ? tie : "random");
        SimConfig cfg{trials ? trials : ctx->trials, seed ? seed : ctx->seed,
                      max_steps ? max_steps : ctx->max_steps, ctx->threads};
        RaceSim sim = simulate_race(u, v, bu, bv, conv, cfg);
        return Json{{"patterns", {u.to_string(), v.to_string()}},
                    {"biases", {bu.to_string(), bv.to_string()}},
                    {"convention", tie_to_string(conv)},
                    {"generator", sim.generator},
                    {"seed", cfg.seed},
                    {"trials", cfg.trials},
                    {"max_steps", cfg.max_steps},
                    {"wins", sim.wins},
                    {"losses", sim.losses},
                    {"ties", sim.ties},
                    {"cutoffs", sim.cutoffs},
                    {"win_freq", sim.win_freq},
                    {"tie_freq", sim.tie_freq},
                    {"ci99_halfwidth", sim.ci99_halfwidth}};
    });
}

int penney_simulate_waiting(penney_ctx* ctx, const char* pattern, const char* bias,
                            uint64_t trials, uint64_t seed, uint64_t max_steps, char** out_json) {
    return guarded(ctx, out_json, [&] {
        BiasVector b = parse_bias(require(bias, "bias"));
        Word w = parse_pattern(require(pattern, "pattern"), b);
        SimConfig cfg{trials ? trials : ctx->trials, seed ? seed : ctx->seed,
                      max_steps ? max_steps : ctx->max_steps, ctx->threads};
        WaitingSim sim = simulate_waiting(w, b, cfg);
        return Json{{"pattern", w.to_string()},
                    {"bias", b.to_string()},
                    {"generator", sim.generator},
                    {"seed", cfg.seed},
                    {"trials", cfg.trials},
                    {"max_steps", cfg.max_steps},
                    {"completed", sim.completed},
                    {"cutoffs", sim.cutoffs},
                    {"mean", sim.mean},
                    {"stderr", sim.stderr_mean}};
    });
}

int penney_race_discrete(penney_ctx* ctx, const char* laws_json, char** out_json) {
    return guarded(ctx, out_json, [&] {
        Json in = Json::parse(require(laws_json, "laws"));
        std::vector<DiscreteLaw> laws;
        for (const auto& lj : in) {
            DiscreteLaw law;
            for (const auto& entry : lj)
                law.mass.emplace_back(Int(entry.at(0).get<long>()),
                                      rat_from_string(entry.at(1).get<std::string>()));
            laws.push_back(std::move(law));
        }
        DiscreteRaceResult res = race_discrete(laws);
        auto matrix = [&](const std::vector<std::vector<Rat>>& m) {
            Json rows = Json::array();
            for (const auto& row : m) {
                Json r = Json::array();
                for (const auto& v : row) r.push_back(rat_to_string(v));
                rows.push_back(std::move(r));
            }
            return rows;
        };
        Json simultaneous = Json::array();
        for (const auto& v : res.simultaneous) simultaneous.push_back(rat_to_string(v));
        return Json{{"rtb", matrix(res.rtb)},
                    {"strict", matrix(res.strict)},
                    {"tie", matrix(res.tie)},
                    {"simultaneous", simultaneous}};
    });
}

}  // extern "C"
