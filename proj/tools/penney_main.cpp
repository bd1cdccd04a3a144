// penney: command-line front end over the C API (libpenney).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "penney.h"

using nlohmann::json;

namespace {

struct Cli {
    penney_ctx* ctx = nullptr;
    bool as_json = false;
    std::string out_path;
};

// exit codes: 0 ok, 1 usage, 2 domain error
int report(Cli& cli, int rc, char* payload) {
    if (rc != PENNEY_OK) {
        std::cerr << "penney: " << penney_last_error(cli.ctx) << "\n";
        penney_string_free(payload);
        return rc == PENNEY_EUSAGE ? 1 : 2;
    }
    return 0;
}

std::string fmt10(const json& approx) {
    double v = std::strtod(approx.get<std::string>().c_str(), nullptr);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string exact_and_decimal(const json& rat) {
    if (rat.is_string()) return rat.get<std::string>();
    return rat.at("exact").get<std::string>() + " (" + fmt10(rat.at("approx")) + ")";
}

std::string window_text(const json& w) {
    auto side = [](const json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.at("approx").get<std::string>();
    };
    return "(" + side(w.at("lo")) + ", " + side(w.at("hi")) + ")";
}

std::string approx7(const json& side) {
    if (side.is_string()) return side.get<std::string>();  // exact endpoint 0 or 1
    double v = std::strtod(side.at("approx").get<std::string>().c_str(), nullptr);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.7f", v);
    return buf;
}

std::string algebraic_csv(const json& side) {
    if (side.is_string()) return side.get<std::string>();
    std::string mp;
    for (const auto& c : side.at("minpoly")) mp += (mp.empty() ? "" : " ") + c.get<std::string>();
    return mp + " on (" + side.at("lo").get<std::string>() + ", " +
           side.at("hi").get<std::string>() + ")";
}

// census summary rows: words, lengths, 7-digit window, exact algebraic endpoints
void write_census_csv(const std::string& path, const json& doc) {
    std::ofstream out(path);
    bool cycles = doc.contains("families");
    if (cycles) {
        out << "a,b,c,lengths,lo7,hi7,lo_exact,hi_exact\n";
        for (const auto& f : doc.at("families")) {
            const auto& t = f.at("triple");
            const auto& w = f.at("window");
            out << t[0].get<std::string>() << "," << t[1].get<std::string>() << ","
                << t[2].get<std::string>() << ","
                << t[0].get<std::string>().size() << "/" << t[1].get<std::string>().size() << "/"
                << t[2].get<std::string>().size() << "," << approx7(w.at("lo")) << ","
                << approx7(w.at("hi")) << ",\"" << algebraic_csv(w.at("lo")) << "\",\""
                << algebraic_csv(w.at("hi")) << "\"\n";
        }
        return;
    }
    out << "first,second,lengths,multiplicity,lo7,hi7,lo_exact,hi_exact\n";
    for (const auto& r : doc.at("windows")) {
        const auto& p = r.at("pair");
        const auto& w = r.at("window");
        out << p[0].get<std::string>() << "," << p[1].get<std::string>() << ","
            << p[0].get<std::string>().size() << "/" << p[1].get<std::string>().size() << ","
            << r.at("multiplicity").get<long>() << "," << approx7(w.at("lo")) << ","
            << approx7(w.at("hi")) << ",\"" << algebraic_csv(w.at("lo")) << "\",\""
            << algebraic_csv(w.at("hi")) << "\"\n";
    }
}

void deliver(Cli& cli, const json& doc, const std::string& human) {
    std::string text = cli.as_json ? doc.dump(2) : human;
    if (!cli.out_path.empty()) {
        std::ofstream out(cli.out_path);
        out << text << "\n";
    } else {
        std::cout << text << "\n";
    }
}

// shared option bundle for bias entry
struct BiasOpt {
    std::string bias;
    int fair = 0;
    std::string resolve(const std::string& fallback = "") const {
        if (fair > 0) return "fair:" + std::to_string(fair);
        if (!bias.empty()) return bias;
        if (!fallback.empty()) return fallback;
        return "1/2";
    }
    void attach(CLI::App* cmd) {
        cmd->add_option("--bias", bias, "bias: coin Pr(H) ('3/5', '0.61') or vector 'a/b,c/d,...'");
        cmd->add_option("--fair", fair, "uniform S-sided die");
    }
};

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    cli.ctx = penney_ctx_new();
    if (!cli.ctx) {
        std::cerr << "penney: out of memory\n";
        return 2;
    }

    CLI::App app{"exact waiting-time laws, head-to-head odds, and certified bias censuses "
                 "for independent pattern races"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may trail the subcommand
    app.set_version_flag("--version", penney_version());
    app.add_flag("--json", cli.as_json, "emit machine-readable JSON");
    app.add_option("--out", cli.out_path, "write output to a file instead of stdout");
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: PENNEY_THREADS or all cores)");
    std::string config_path;
    app.add_option("--config", config_path, "key=value option file (horizon, threads, db_path, ...)");

    int exit_code = 0;
    auto run = [&](int rc, char** payload, auto humanize) {
        int bad = report(cli, rc, *payload);
        if (bad) {
            exit_code = bad;
            return;
        }
        json doc = json::parse(*payload);
        penney_string_free(*payload);
        deliver(cli, doc, humanize(doc));
    };

    // config file first, then flags on top; runs before any subcommand body
    bool globals_applied = false;
    auto apply_globals = [&] {
        if (globals_applied) return;
        globals_applied = true;
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) {
                std::cerr << "penney: cannot read config " << config_path << "\n";
                exit_code = 1;
                return;
            }
            std::string line;
            while (std::getline(f, line)) {
                if (line.empty() || line[0] == '#') continue;
                auto eq = line.find('=');
                if (eq == std::string::npos) continue;
                std::string key = line.substr(0, eq), value = line.substr(eq + 1);
                if (penney_ctx_set(cli.ctx, key.c_str(), value.c_str()) != PENNEY_OK) {
                    std::cerr << "penney: config: " << penney_last_error(cli.ctx) << "\n";
                    exit_code = 1;
                    return;
                }
            }
        }
        if (threads > 0)
            penney_ctx_set(cli.ctx, "threads", std::to_string(threads).c_str());
    };

    // expect
    auto* expect = app.add_subcommand("expect", "exact mean waiting time of a pattern");
    std::string expect_pattern;
    BiasOpt expect_bias;
    bool expect_symbolic = false;
    expect->add_option("pattern", expect_pattern)->required();
    expect_bias.attach(expect);
    expect->add_flag("--symbolic", expect_symbolic, "coin mean as a function of p");
    expect->callback([&] {
        apply_globals();
        if (exit_code) return;
        char* out = nullptr;
        if (expect_symbolic) {
            run(penney_mean_symbolic(cli.ctx, expect_pattern.c_str(), &out), &out,
                [](const json& d) { return d.at("display").get<std::string>(); });
        } else {
            run(penney_expect(cli.ctx, expect_pattern.c_str(), expect_bias.resolve().c_str(), &out),
                &out, [](const json& d) {
                    const auto& mean = d.at("mean");
                    if (mean.at("exact").get<std::string>().find('/') == std::string::npos)
                        return mean.at("exact").get<std::string>();
                    return exact_and_decimal(mean);
                });
        }
    });

    // pgf
    auto* pgf = app.add_subcommand("pgf", "waiting-time pgf, hit and survival arrays");
    std::string pgf_pattern;
    BiasOpt pgf_bias;
    int pgf_horizon = 0;
    pgf->add_option("pattern", pgf_pattern)->required();
    pgf_bias.attach(pgf);
    pgf->add_option("--horizon", pgf_horizon, "truncation horizon (default: per-pattern rule)");
    pgf->callback([&] {
        apply_globals();
        if (exit_code) return;
        char* out = nullptr;
        run(penney_pgf(cli.ctx, pgf_pattern.c_str(), pgf_bias.resolve().c_str(), pgf_horizon, &out),
            &out, [](const json& d) {
                std::ostringstream os;
                os << "pattern " << d.at("pattern").get<std::string>() << "  bias "
                   << d.at("bias").get<std::string>() << "\n";
                os << "mean = " << exact_and_decimal(d.at("mean")) << "\n";
                auto join = [](const json& arr) {
                    std::string s;
                    for (const auto& c : arr) s += (s.empty() ? "" : ", ") + c.get<std::string>();
                    return s;
                };
                os << "pgf num (by x^k): [" << join(d.at("pgf").at("num")) << "]\n";
                os << "pgf den (by x^k): [" << join(d.at("pgf").at("den")) << "]\n";
                int show = std::min<int>(10, static_cast<int>(d.at("hit").size()) - 1);
                os << "first hit probabilities up to n=" << show << ": ";
                for (int i = 1; i <= show; ++i)
                    os << d.at("hit")[i].get<std::string>() << (i < show ? ", " : "\n");
                os << "horizon " << d.at("horizon").get<int>() << ", survival there "
                   << d.at("survival").back().get<std::string>();
                return os.str();
            });
    });

    // race
    auto* race = app.add_subcommand("race", "exact head-to-head odds of two patterns");
    std::string race_u, race_v, race_bias2, race_tie = "random";
    BiasOpt race_bias;
    int race_bounds = 0;
    race->add_option("first", race_u)->required();
    race->add_option("second", race_v)->required();
    race_bias.attach(race);
    race->add_option("--bias2", race_bias2, "second player's bias (defaults to the first)");
    race->add_option("--tie", race_tie, "strict | first | random")->capture_default_str();
    race->add_option("--bounds", race_bounds, "also report a certified series enclosure of order N");
    race->callback([&] {
        apply_globals();
        if (exit_code) return;
        char* out = nullptr;
        std::string b1 = race_bias.resolve();
        std::string b2 = race_bias2.empty() ? b1 : race_bias2;
        run(penney_race(cli.ctx, race_u.c_str(), race_v.c_str(), b1.c_str(), b2.c_str(),
                        race_tie.c_str(), race_bounds, &out),
            &out, [](const json& d) {
                std::ostringstream os;
                os << d.at("patterns")[0].get<std::string>() << " vs "
                   << d.at("patterns")[1].get<std::string>() << " ("
                   << d.at("convention").get<std::string>() << " ties)\n";
                os << "first wins:  " << d.at("first").get<std::string>() << " ("
                   << fmt10(d.at("approx").at("first")) << ")\n";
                os << "second wins: " << d.at("second").get<std::string>() << " ("
                   << fmt10(d.at("approx").at("second")) << ")\n";
                os << "tie:         " << d.at("tie").get<std::string>() << " ("
                   << fmt10(d.at("approx").at("tie")) << ")";
                if (d.contains("hadamard")) {
                    os << "\nseries enclosure (n=" << d.at("hadamard").at("n").get<int>() << "): ["
                       << d.at("hadamard").at("lo").get<std::string>() << ", "
                       << d.at("hadamard").at("hi").get<std::string>() << "]";
                }
                return os.str();
            });
    });

    // advantage
    auto* adv = app.add_subcommand("advantage", "g(p) = W_rtb(first beats second) - 1/2");
    std::string adv_u, adv_v;
    adv->add_option("first", adv_u)->required();
    adv->add_option("second", adv_v)->required();
    adv->callback([&] {
        apply_globals();
        if (exit_code) return;
        char* out = nullptr;
        run(penney_advantage(cli.ctx, adv_u.c_str(), adv_v.c_str(), &out), &out, [](const json& d) {
            std::ostringstream os;
            os << "g_{" << d.at("pair")[0].get<std::string>() << ","
               << d.at("pair")[1].get<std::string>() << "}(p) = "
               << d.at("display").get<std::string>() << "\n";
            os << "degrees (num, den) = (" << d.at("degrees")[0].get<int>() << ", "
               << d.at("degrees")[1].get<int>() << "), border sums ("
               << d.at("border_sums")[0].get<int>() << ", " << d.at("border_sums")[1].get<int>()
               << ")";
            return os.str();
        });
    });

    // crossovers
    auto* cross = app.add_subcommand("crossovers", "zeros of the advantage in (0,1)");
    std::string cross_u, cross_v;
    cross->add_option("first", cross_u)->required();
    cross->add_option("second", cross_v)->required();
    cross->callback([&] {
        apply_globals();
        if (exit_code) return;
        char* out = nullptr;
        run(penney_crossovers(cli.ctx, cross_u.c_str(), cross_v.c_str(), &out), &out,
            [](const json& d) {
                std::ostringstream os;
                os << d.at("roots").size() << " crossover(s)\n";
                for (const auto& r : d.at("roots"))
                    os << "  root ~ " << r.at("approx").get<std::string>() << "  in ["
                       << r.at("lo").get<std::string>() << ", " << r.at("hi").get<std::string>()
                       << "]\n";
                os << "near p=0: " << d.at("at_zero").at("kind").get<std::string>() << " (sign "
                   << d.at("at_zero").at("side_sign").get<int>() << ")\n";
                os << "near p=1: " << d.at("at_one").at("kind").get<std::string>() << " (sign "
                   << d.at("at_one").at("side_sign").get<int>() << ")";
                return os.str();
            });
    });

    // critical
    auto* crit = app.add_subcommand("critical", "critical points of the win probability");
    std::string crit_u, crit_v, crit_tie = "random";
    crit->add_option("first", crit_u)->required();
    crit->add_option("second", crit_v)->required();
    crit->add_option("--tie", crit_tie)->capture_default_str();
    crit->callback([&] {
        apply_globals();
        if (exit_code) return;
        char* out = nullptr;
        run(penney_critical(cli.ctx, crit_u.c_str(), crit_v.c_str(), crit_tie.c_str(), &out), &out,
            [](const json& d) {
                std::ostringstream os;
                os << d.at("points").size() << " critical point(s)\n";
                for (const auto& p : d.at("points"))
                    os << "  " << p.at("kind").get<std::string>() << " at p ~ "
                       << p.at("location").at("approx").get<std::string>() << ", value ~ "
                       << fmt10(p.at("value_approx")) << "\n";
                std::string s = os.str();
                if (!s.empty() && s.back() == '\n') s.pop_back();
                return s;
            });
    });

    // dominance
    auto* dom = app.add_subcommand("dominance", "stochastic-dominance comparison of waiting times");
    std::string dom_u, dom_v;
    BiasOpt dom_bias;
    int dom_horizon = 0;
    dom->add_option("first", dom_u)->required();
    dom->add_option("second", dom_v)->required();
    dom_bias.attach(dom);
    dom->add_option("--horizon", dom_horizon, "tail comparison horizon (default 4096)");
    dom->callback([&] {
        apply_globals();
        if (exit_code) return;
        char* out = nullptr;
        run(penney_dominance(cli.ctx, dom_u.c_str(), dom_v.c_str(), dom_bias.resolve().c_str(),
                             dom_horizon, &out),
            &out, [](const json& d) {
                std::ostringstream os;
                os << d.at("verdict").get<std::string>();
                if (d.at("certified").get<bool>()) {
                    os << " (certified";
                    if (!d.at("certificate").get<std::string>().empty())
                        os << ": " << d.at("certificate").get<std::string>();
                    os << ")";
                } else {
                    os << " (uncertified, horizon " << d.at("horizon").get<int>() << ")";
                }
                if (d.contains("witness")) {
                    const auto& w = d.at("witness");
                    os << "\ntails cross: S_first(" << w.at("n_lo").get<int>() << ") = "
                       << w.at("tail_first_lo").get<std::string>() << " vs S_second = "
                       << w.at("tail_second_lo").get<std::string>() << "; at n = "
                       << w.at("n_hi").get<int>() << " the order flips";
                }
                return os.str();
            });
    });

    // witness
    auto* wit = app.add_subcommand("witness", "incomparable pair at a biased coin");
    std::string wit_bias;
    wit->add_option("p", wit_bias, "coin bias, p != 1/2")->required();
    wit->callback([&] {
        apply_globals();
        if (exit_code) return;
        char* out = nullptr;
        run(penney_witness(cli.ctx, wit_bias.c_str(), &out), &out, [](const json& d) {
            return d.at("first").get<std::string>() + " vs " + d.at("second").get<std::string>() +
                   "  (n = " + std::to_string(d.at("n").get<int>()) + ")";
        });
    });

    // census
    auto* census = app.add_subcommand("census", "certified classifications over all short patterns");
    census->require_subcommand(1);
    int census_len = 4;
    std::string census_db;
    std::string census_csv;
    auto* cyc = census->add_subcommand("cycles", "non-transitive cycle families");
    cyc->add_option("--max-len", census_len, "maximum pattern length")->required();
    cyc->add_option("--db", census_db, "crossover database path (JSON lines, resumable)");
    cyc->add_option("--csv", census_csv, "also write a CSV summary of the windows");
    cyc->callback([&] {
        apply_globals();
        if (exit_code) return;
        if (!census_db.empty()) penney_ctx_set(cli.ctx, "db_path", census_db.c_str());
        char* out = nullptr;
        run(penney_census_cycles(cli.ctx, census_len, &out), &out, [&](const json& d) {
            if (!census_csv.empty()) write_census_csv(census_csv, d);
            std::ostringstream os;
            os << d.at("count").get<long>() << " non-transitive famil"
               << (d.at("count").get<long>() == 1 ? "y" : "ies") << " up to length "
               << d.at("max_len").get<int>() << "\n";
            for (const auto& f : d.at("families"))
                os << "  (" << f.at("triple")[0].get<std::string>() << " > "
                   << f.at("triple")[1].get<std::string>() << " > "
                   << f.at("triple")[2].get<std::string>() << " > ...)  p in "
                   << window_text(f.at("window")) << "\n";
            std::string s = os.str();
            if (!s.empty() && s.back() == '\n') s.pop_back();
            return s;
        });
    });
    auto* rev = census->add_subcommand("reversals", "mean-vs-odds reversal windows");
    rev->add_option("--max-len", census_len, "maximum pattern length")->required();
    rev->add_option("--db", census_db, "crossover database path (JSON lines, resumable)");
    rev->add_option("--csv", census_csv, "also write a CSV summary of the windows");
    rev->callback([&] {
        apply_globals();
        if (exit_code) return;
        if (!census_db.empty()) penney_ctx_set(cli.ctx, "db_path", census_db.c_str());
        char* out = nullptr;
        run(penney_census_reversals(cli.ctx, census_len, &out), &out, [&](const json& d) {
            if (!census_csv.empty()) write_census_csv(census_csv, d);
            std::ostringstream os;
            os << d.at("total_windows").get<long>() << " reversal windows (ordered raw pairs), "
               << d.at("canonical_windows").get<long>() << " canonical, up to length "
               << d.at("max_len").get<int>() << "\n";
            os << "counts by length profile:";
            for (const auto& row : d.at("counts_by_length"))
                os << "  {" << row.at("lengths")[0].get<int>() << ","
                   << row.at("lengths")[1].get<int>() << "}: " << row.at("count").get<long>();
            os << "\nno-reversal gap around 1/2: " << window_text(d.at("no_reversal_gap"));
            return os.str();
        });
    });

    // verify-cycle
    auto* verify = app.add_subcommand("verify-cycle", "exact check of a directed 3-cycle");
    std::vector<std::string> verify_pats;
    std::vector<std::string> verify_biases;
    verify->add_option("patterns", verify_pats, "three patterns")->required()->expected(3);
    verify->add_option("--bias", verify_biases, "one shared or three per-player biases")
        ->required()
        ->expected(1, 3);
    verify->callback([&] {
        apply_globals();
        if (exit_code) return;
        std::string pats = verify_pats[0] + "," + verify_pats[1] + "," + verify_pats[2];
        std::string biases = verify_biases[0];
        for (size_t i = 1; i < verify_biases.size(); ++i) biases += ";" + verify_biases[i];
        char* out = nullptr;
        run(penney_verify_cycle(cli.ctx, pats.c_str(), biases.c_str(), &out), &out,
            [](const json& d) {
                std::ostringstream os;
                os << (d.at("cycle").get<bool>() ? "cycle holds" : "no cycle") << "\n";
                for (const auto& leg : d.at("legs"))
                    os << "  " << leg.at("leg").get<std::string>() << ": "
                       << leg.at("first").get<std::string>() << " ("
                       << fmt10(leg.at("approx").at("first")) << ")\n";
                std::string s = os.str();
                s.pop_back();
                return s;
            });
    });

    // scan
    auto* scan = app.add_subcommand("scan", "exact orientation scan over a bias grid");
    std::vector<std::string> scan_pats;
    std::string scan_mode = "common_p", scan_step = "1/50";
    std::vector<std::string> scan_windows;
    scan->add_option("patterns", scan_pats)->required()->expected(2, 8);
    scan->add_option("--mode", scan_mode, "common_p | per_player | simplex")->capture_default_str();
    scan->add_option("--step", scan_step, "grid step, a rational in (0, 1/4]")
        ->capture_default_str();
    scan->add_option("--window", scan_windows, "per-axis zoom lo:hi (repeatable)");
    scan->callback([&] {
        apply_globals();
        if (exit_code) return;
        std::string pats;
        for (const auto& p : scan_pats) pats += (pats.empty() ? "" : ",") + p;
        std::string windows;
        for (const auto& w : scan_windows) windows += (windows.empty() ? "" : ";") + w;
        // --out receives the CSV; the summary goes to stdout
        std::string csv = cli.out_path;
        cli.out_path.clear();
        char* out = nullptr;
        run(penney_scan(cli.ctx, pats.c_str(), scan_mode.c_str(), scan_step.c_str(),
                        windows.c_str(), csv.c_str(), &out),
            &out, [](const json& d) {
                std::ostringstream os;
                os << d.at("points").get<long>() << " grid points, "
                   << d.at("cycle_points").get<long>() << " with directed cycles";
                if (d.contains("csv")) os << "\ncsv written to " << d.at("csv").get<std::string>();
                for (const auto& row : d.at("flagged")) {
                    os << "\n  " << row.get<std::string>();
                    break;  // show at most one example row
                }
                return os.str();
            });
    });

    // simulate
    auto* sim = app.add_subcommand("simulate", "seeded Monte Carlo oracle");
    sim->require_subcommand(1);
    uint64_t sim_trials = 0, sim_seed = 0, sim_steps = 0;
    auto add_sim_common = [&](CLI::App* c) {
        c->add_option("--trials", sim_trials, "trial count (default 100000)");
        c->add_option("--seed", sim_seed, "RNG seed (default 1)");
        c->add_option("--max-steps", sim_steps, "per-trial cutoff (default 10^6)");
    };
    auto* sim_race = sim->add_subcommand("race", "simulate a two-player race");
    std::string sr_u, sr_v, sr_bias2, sr_tie = "random";
    BiasOpt sr_bias;
    sim_race->add_option("first", sr_u)->required();
    sim_race->add_option("second", sr_v)->required();
    sr_bias.attach(sim_race);
    sim_race->add_option("--bias2", sr_bias2);
    sim_race->add_option("--tie", sr_tie)->capture_default_str();
    add_sim_common(sim_race);
    sim_race->callback([&] {
        apply_globals();
        if (exit_code) return;
        std::string b1 = sr_bias.resolve();
        std::string b2 = sr_bias2.empty() ? b1 : sr_bias2;
        char* out = nullptr;
        run(penney_simulate_race(cli.ctx, sr_u.c_str(), sr_v.c_str(), b1.c_str(), b2.c_str(),
                                 sr_tie.c_str(), sim_trials, sim_seed, sim_steps, &out),
            &out, [](const json& d) {
                std::ostringstream os;
                os << "win frequency " << d.at("win_freq").get<double>() << " +- "
                   << d.at("ci99_halfwidth").get<double>() << " (99% CI), ties "
                   << d.at("tie_freq").get<double>() << ", cutoffs "
                   << d.at("cutoffs").get<uint64_t>() << "\n";
                os << "generator " << d.at("generator").get<std::string>() << ", seed "
                   << d.at("seed").get<uint64_t>() << ", trials " << d.at("trials").get<uint64_t>();
                return os.str();
            });
    });
    auto* sim_wait = sim->add_subcommand("waiting", "simulate a waiting time");
    std::string sw_pattern;
    BiasOpt sw_bias;
    sim_wait->add_option("pattern", sw_pattern)->required();
    sw_bias.attach(sim_wait);
    add_sim_common(sim_wait);
    sim_wait->callback([&] {
        apply_globals();
        if (exit_code) return;
        char* out = nullptr;
        run(penney_simulate_waiting(cli.ctx, sw_pattern.c_str(), sw_bias.resolve().c_str(),
                                    sim_trials, sim_seed, sim_steps, &out),
            &out, [](const json& d) {
                std::ostringstream os;
                os << "sample mean " << d.at("mean").get<double>() << " +- "
                   << d.at("stderr").get<double>() << " (1 SE), cutoffs "
                   << d.at("cutoffs").get<uint64_t>() << "\n";
                os << "generator " << d.at("generator").get<std::string>() << ", seed "
                   << d.at("seed").get<uint64_t>() << ", trials " << d.at("trials").get<uint64_t>();
                return os.str();
            });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        penney_ctx_free(cli.ctx);
        return rc == 0 ? 0 : 1;
    }

    penney_ctx_free(cli.ctx);
    return exit_code;
}
