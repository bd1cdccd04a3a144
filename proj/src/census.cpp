#include "penney/census.hpp"

#include <algorithm>
#include <bitset>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "penney/dominance.hpp"
#include "penney/json_io.hpp"
#include "penney/parallel.hpp"

namespace penney {

namespace {

constexpr const char* kConvention = "rtb";
const Rat kDyadic40 = make_rat(Int(1), int_pow(Int(2), 40));

std::string pair_key(const Word& a, const Word& b) {
    return a.to_string() + "|" + b.to_string() + "|" + kConvention;
}

Json record_json(const CrossoverRecord& rec) {
    Json j;
    j["pair"] = {rec.first.to_string(), rec.second.to_string()};
    j["conv"] = kConvention;
    if (rec.substring_pruned) {
        j["kind"] = "substring";
        j["orientation"] = *rec.fixed_orientation;
        return j;
    }
    if (rec.identically_half) {
        j["kind"] = "half";
        return j;
    }
    j["kind"] = "advantage";
    j["num"] = zpoly_json(rec.g.num());
    j["den"] = zpoly_json(rec.g.den());
    j["roots"] = Json::array();
    for (const auto& r : rec.roots) j["roots"].push_back(algebraic_json(r));
    j["sign_cells"] = rec.sign_cells;
    if (rec.fixed_orientation) j["orientation"] = *rec.fixed_orientation;
    return j;
}

CrossoverRecord record_from_json(const Json& j) {
    CrossoverRecord rec;
    rec.first = Word::parse(j.at("pair")[0].get<std::string>(), 2);
    rec.second = Word::parse(j.at("pair")[1].get<std::string>(), 2);
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "substring") {
        rec.substring_pruned = true;
        rec.fixed_orientation = j.at("orientation").get<int>();
        return rec;
    }
    if (kind == "half") {
        rec.identically_half = true;
        return rec;
    }
    rec.g = RatFunc(zpoly_from_json(j.at("num")), zpoly_from_json(j.at("den")));
    for (const auto& rj : j.at("roots")) rec.roots.push_back(algebraic_from_json(rj));
    rec.sign_cells = j.at("sign_cells").get<std::vector<int>>();
    if (j.contains("orientation")) rec.fixed_orientation = j.at("orientation").get<int>();
    return rec;
}

CrossoverRecord compute_record(const Word& first, const Word& second) {
    CrossoverRecord rec;
    rec.first = first;
    rec.second = second;
    if (is_substring(first, second)) {
        // tau_first <= tau_second pathwise: orientation fixed at every bias,
        // no root search needed
        rec.substring_pruned = true;
        rec.fixed_orientation = +1;
        return rec;
    }
    AdvantageFunction adv = advantage_function(first, second);
    rec.g = adv.g;
    if (rec.g.is_zero()) {
        rec.identically_half = true;
        return rec;
    }
    rec.roots = isolate_real_roots(rec.g.num(), Rat(0), Rat(1));
    for (auto& r : rec.roots) {
        while (!(r.lo() > 0 && r.hi() < 1)) r.refine_step();
        r.refine_to(kDyadic40);
    }
    std::vector<Rat> probes;
    if (rec.roots.empty()) {
        probes.push_back(make_rat(1, 2));
    } else {
        probes.push_back(Rat(rec.roots.front().lo() / 2));
        for (size_t i = 0; i + 1 < rec.roots.size(); ++i)
            probes.push_back(Rat((rec.roots[i].hi() + rec.roots[i + 1].lo()) / 2));
        probes.push_back(Rat((rec.roots.back().hi() + 1) / 2));
    }
    for (const Rat& t : probes) rec.sign_cells.push_back(rec.g.sign_at(t));
    if (rec.roots.empty()) rec.fixed_orientation = rec.sign_cells[0];
    return rec;
}

}  // namespace

CrossoverDb CrossoverDb::build(int max_len, const std::string& db_path, int threads) {
    if (max_len < 1) throw DomainError("BadLength", "max_len must be at least 1");
    CrossoverDb db;
    db.max_len_ = max_len;
    db.classes_ = enumerate_classes(max_len, 2);
    const auto& reps = db.classes_.reps;

    std::map<std::string, CrossoverRecord> known;
    if (!db_path.empty()) {
        std::ifstream in(db_path);
        std::string line;
        size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                Json j = Json::parse(line);
                if (j.at("conv").get<std::string>() != kConvention) continue;
                CrossoverRecord rec = record_from_json(j);
                known.emplace(pair_key(rec.first, rec.second), std::move(rec));
            } catch (const std::exception& e) {
                throw DomainError("BadDatabase",
                                  db_path + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
    }

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j) pairs.emplace_back(i, j);

    // fresh records are appended incrementally, but always in canonical pair
    // order (a write cursor trails the out-of-order workers), so the file
    // bytes never depend on scheduling and an interrupted run resumes
    std::vector<CrossoverRecord> fresh(pairs.size());
    std::vector<char> state(pairs.size(), 0);  // 0 pending, 1 cached, 2 computed
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (known.count(pair_key(reps[pairs[k].first], reps[pairs[k].second]))) state[k] = 1;
    }
    std::ofstream append;
    if (!db_path.empty()) append.open(db_path, std::ios::app);
    std::mutex io_mutex;
    size_t cursor = 0;
    auto advance_writer = [&] {
        while (cursor < pairs.size() && state[cursor] != 0) {
            if (state[cursor] == 2 && append.is_open())
                append << record_json(fresh[cursor]).dump() << "\n" << std::flush;
            ++cursor;
        }
    };
    parallel_for(pairs.size(), threads, [&](size_t k) {
        if (state[k] == 1) {
            std::lock_guard<std::mutex> lock(io_mutex);
            advance_writer();
            return;
        }
        CrossoverRecord rec = compute_record(reps[pairs[k].first], reps[pairs[k].second]);
        std::lock_guard<std::mutex> lock(io_mutex);
        fresh[k] = std::move(rec);
        state[k] = 2;
        advance_writer();
    });
    {
        std::lock_guard<std::mutex> lock(io_mutex);
        advance_writer();
    }

    db.records_.reserve(pairs.size());
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (state[k] == 1) {
            db.records_.push_back(known.at(pair_key(reps[pairs[k].first], reps[pairs[k].second])));
        } else if (state[k] == 2) {
            db.records_.push_back(std::move(fresh[k]));
        } else {
            throw std::logic_error("crossover record neither cached nor computed");
        }
        db.index_[pairs[k]] = db.records_.size() - 1;
    }
    return db;
}

const CrossoverRecord& CrossoverDb::record(size_t i, size_t j) const {
    auto it = index_.find(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
    if (it == index_.end()) throw std::logic_error("no crossover record for pair");
    return records_[it->second];
}

int CrossoverDb::sign_between(size_t i, size_t j, const Rat& point) const {
    const CrossoverRecord& rec = record(i, j);
    int flip = i < j ? +1 : -1;
    if (rec.substring_pruned) return flip * *rec.fixed_orientation;
    if (rec.identically_half) return 0;
    size_t cell = 0;
    for (const auto& r : rec.roots) {
        int c = compare(r, point);
        if (c == 0) throw std::logic_error("sign_between queried at a crossover root");
        if (c < 0) ++cell;
    }
    return flip * rec.sign_cells[cell];
}

namespace {

// every record's roots, globally sorted and deduplicated, with each
// record's roots mapped to global breakpoint indices
struct Breakpoints {
    std::vector<AlgebraicNumber> points;
    std::vector<std::vector<size_t>> per_record;
};

Breakpoints global_breakpoints(const CrossoverDb& db) {
    Breakpoints bp;
    std::vector<AlgebraicNumber> all;
    std::vector<size_t> origin_record;
    for (size_t r = 0; r < db.records().size(); ++r) {
        for (const auto& root : db.records()[r].roots) {
            all.push_back(root);
            origin_record.push_back(r);
        }
    }
    bp.per_record.assign(db.records().size(), {});
    auto remap = sort_unique(all);
    bp.points = std::move(all);
    for (size_t t = 0; t < origin_record.size(); ++t)
        bp.per_record[origin_record[t]].push_back(remap[t]);
    for (auto& v : bp.per_record) std::sort(v.begin(), v.end());
    return bp;
}

Rat cell_midpoint(const std::vector<AlgebraicNumber>& points, size_t c) {
    const size_t m = points.size();
    if (m == 0) return make_rat(1, 2);
    if (c == 0) return Rat(points.front().lo() / 2);
    if (c == m) return Rat((points.back().hi() + 1) / 2);
    return Rat((points[c - 1].hi() + points[c].lo()) / 2);
}

}  // namespace

std::vector<Cell> decompose_cells(const CrossoverDb& db) {
    Breakpoints bp = global_breakpoints(db);
    std::vector<Cell> cells;
    const size_t m = bp.points.size();
    for (size_t c = 0; c <= m; ++c) {
        Cell cell;
        if (c > 0) cell.lo = bp.points[c - 1];
        if (c < m) cell.hi = bp.points[c];
        cell.midpoint = cell_midpoint(bp.points, c);
        cells.push_back(std::move(cell));
    }
    return cells;
}

namespace {

constexpr size_t kMaxReps = 256;
using RepSet = std::bitset<kMaxReps>;

struct OrientedTriple {
    std::array<size_t, 3> idx;  // a -> b -> c -> a, a smallest
    bool operator<(const OrientedTriple& o) const { return idx < o.idx; }
};

struct RawWindow {
    OrientedTriple triple;
    size_t first_cell, last_cell;
};

AlgebraicNumber mirror(const AlgebraicNumber& r) {
    return AlgebraicNumber(squarefree_part(r.minpoly().compose_one_minus_x()), Rat(1 - r.hi()),
                           Rat(1 - r.lo()));
}

struct FamilyCandidate {
    std::array<Word, 3> words;
    std::optional<AlgebraicNumber> lo, hi;
    Rat midpoint;
};

std::array<Word, 3> rotate_min(const std::array<Word, 3>& w) {
    std::array<Word, 3> best = w;
    for (int r = 1; r < 3; ++r) {
        std::array<Word, 3> rot{w[r], w[(r + 1) % 3], w[(r + 2) % 3]};
        if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end(),
                                         [](const Word& a, const Word& b) { return a < b; }))
            best = rot;
    }
    return best;
}

bool same_endpoint(const std::optional<AlgebraicNumber>& a,
                   const std::optional<AlgebraicNumber>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return compare(*a, *b) == 0;
}

}  // namespace

std::vector<CycleFamily> find_cycle_families(int max_len, const std::string& db_path, int threads) {
    if (max_len < 2) throw DomainError("BadLength", "cycles need max_len >= 2");
    CrossoverDb db = CrossoverDb::build(max_len, db_path, threads);
    const auto& reps = db.classes().reps;
    const size_t n = reps.size();
    if (n > kMaxReps) throw DomainError("BadLength", "too many representatives for the sweep");
    Breakpoints bp = global_breakpoints(db);
    const size_t cells = bp.points.size() + 1;

    // pair index and sign state for sparse recomputation across cells
    std::vector<std::vector<size_t>> pair_of(n, std::vector<size_t>(n, 0));
    std::vector<const CrossoverRecord*> recs;
    std::vector<std::pair<size_t, size_t>> rec_pair;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            pair_of[i][j] = recs.size();
            recs.push_back(&db.record(i, j));
            rec_pair.emplace_back(i, j);
        }
    // owners[b]: records whose advantage vanishes at breakpoint b
    std::vector<std::vector<size_t>> owners(bp.points.size());
    std::vector<size_t> own_cell(recs.size(), 0);
    for (size_t r = 0; r < recs.size(); ++r) {
        size_t rec_idx = static_cast<size_t>(recs[r] - db.records().data());
        for (size_t b : bp.per_record[rec_idx]) owners[b].push_back(r);
    }

    std::vector<RepSet> out(n), in(n);
    auto set_sign = [&](size_t i, size_t j, int sgn) {
        out[i][j] = in[j][i] = sgn > 0;
        out[j][i] = in[i][j] = sgn < 0;
    };
    for (size_t r = 0; r < recs.size(); ++r) {
        auto [i, j] = rec_pair[r];
        const CrossoverRecord& rec = *recs[r];
        int sgn = rec.substring_pruned ? *rec.fixed_orientation
                                       : (rec.identically_half ? 0 : rec.sign_cells[0]);
        set_sign(i, j, sgn);
    }

    std::vector<RawWindow> raw;
    std::map<OrientedTriple, size_t> active;
    for (size_t c = 0; c < cells; ++c) {
        if (c > 0) {
            // crossing breakpoint c-1 flips only the pairs owning it
            for (size_t r : owners[c - 1]) {
                auto [i, j] = rec_pair[r];
                set_sign(i, j, recs[r]->sign_cells[++own_cell[r]]);
            }
        }
        std::set<OrientedTriple> current;
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = a + 1; b < n; ++b) {
                if (!out[a][b]) continue;
                RepSet mask = out[b] & in[a];
                for (size_t x = a + 1; x < n; ++x)
                    if (mask[x]) current.insert(OrientedTriple{{a, b, x}});
            }
        }
        for (const auto& t : current)
            if (!active.count(t)) active[t] = c;
        for (auto it = active.begin(); it != active.end();) {
            if (!current.count(it->first)) {
                raw.push_back(RawWindow{it->first, it->second, c - 1});
                it = active.erase(it);
            } else {
                ++it;
            }
        }
    }
    for (const auto& [t, start] : active) raw.push_back(RawWindow{t, start, cells - 1});

    // dedup up to rotation and complement-with-mirrored-bias; report the
    // window with p >= 1/2
    std::vector<FamilyCandidate> kept;
    for (const auto& w : raw) {
        FamilyCandidate cand;
        cand.words = {reps[w.triple.idx[0]], reps[w.triple.idx[1]], reps[w.triple.idx[2]]};
        if (w.first_cell > 0) cand.lo = bp.points[w.first_cell - 1];
        if (w.last_cell + 1 < cells) cand.hi = bp.points[w.last_cell];
        Rat lo_r = cand.lo ? Rat(cand.lo->hi()) : Rat(0);
        Rat hi_r = cand.hi ? Rat(cand.hi->lo()) : Rat(1);
        cand.midpoint = Rat((lo_r + hi_r) / 2);
        if (cand.midpoint < make_rat(1, 2)) {
            std::array<Word, 3> comp;
            for (int i = 0; i < 3; ++i)
                comp[i] = canonical_representative(cand.words[i].complemented());
            std::optional<AlgebraicNumber> nlo, nhi;
            if (cand.hi) nlo = mirror(*cand.hi);
            if (cand.lo) nhi = mirror(*cand.lo);
            cand.words = comp;
            cand.lo = std::move(nlo);
            cand.hi = std::move(nhi);
            cand.midpoint = Rat(1 - cand.midpoint);
        }
        cand.words = rotate_min(cand.words);
        bool dup = false;
        for (const auto& k : kept) {
            if (k.words == cand.words && same_endpoint(k.lo, cand.lo) &&
                same_endpoint(k.hi, cand.hi)) {
                dup = true;
                break;
            }
        }
        if (!dup) kept.push_back(std::move(cand));
    }
    std::sort(kept.begin(), kept.end(), [](const FamilyCandidate& a, const FamilyCandidate& b) {
        if (a.midpoint != b.midpoint) return a.midpoint < b.midpoint;
        return std::lexicographical_compare(a.words.begin(), a.words.end(), b.words.begin(),
                                            b.words.end(),
                                            [](const Word& x, const Word& y) { return x < y; });
    });

    std::vector<CycleFamily> families;
    for (auto& k : kept) {
        BiasVector bias = BiasVector::coin(k.midpoint);
        auto check = verify_cycle_at({k.words[0], k.words[1], k.words[2]}, {bias, bias, bias});
        if (!check.is_cycle) throw std::logic_error("cycle family failed its midpoint check");
        CycleFamily fam;
        fam.triple = k.words;
        fam.window_lo = std::move(k.lo);
        fam.window_hi = std::move(k.hi);
        fam.window_midpoint = k.midpoint;
        fam.equivalence = "profile+reversal+rotation+complement-mirror";
        families.push_back(std::move(fam));
    }
    return families;
}

ReversalCensus find_reversal_windows(int max_len, const std::string& db_path, int threads) {
    if (max_len < 2) throw DomainError("BadLength", "the reversal census needs max_len >= 2");
    CrossoverDb db = CrossoverDb::build(max_len, db_path, threads);
    const auto& reps = db.classes().reps;
    const auto& sizes = db.classes().class_sizes;
    const size_t n = reps.size();

    std::vector<RatFunc> means(n);
    for (size_t i = 0; i < n; ++i) means[i] = mean_symbolic(reps[i]);

    std::vector<std::pair<size_t, size_t>> ordered;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) ordered.emplace_back(i, j);

    std::vector<std::vector<ReversalWindow>> per_pair(ordered.size());
    parallel_for(ordered.size(), threads, [&](size_t k) {
        auto [i, j] = ordered[k];
        const CrossoverRecord& rec = db.record(i, j);
        if (rec.substring_pruned || rec.identically_half) return;
        const int flip = i < j ? +1 : -1;
        RatFunc md = means[j] - means[i];  // E_second - E_first, must be > 0
        if (md.is_zero()) return;
        std::vector<AlgebraicNumber> cuts = rec.roots;
        for (auto& r : isolate_real_roots(md.num(), Rat(0), Rat(1))) cuts.push_back(std::move(r));
        sort_unique(cuts);
        for (auto& r : cuts)
            while (!(r.lo() > 0 && r.hi() < 1)) r.refine_step();
        const size_t m = cuts.size();
        auto g_sign_at = [&](const Rat& t) {
            size_t cell = 0;
            for (const auto& r : rec.roots)
                if (compare(r, t) < 0) ++cell;
            return flip * rec.sign_cells[cell];
        };
        long run_start = -1;
        auto flush = [&](size_t end_cell) {
            if (run_start < 0) return;
            ReversalWindow w;
            w.first = reps[i];
            w.second = reps[j];
            if (run_start > 0) w.lo = cuts[run_start - 1];
            if (end_cell < m) w.hi = cuts[end_cell];
            Rat lo_r = w.lo ? Rat(w.lo->hi()) : Rat(0);
            Rat hi_r = w.hi ? Rat(w.hi->lo()) : Rat(1);
            w.midpoint = Rat((lo_r + hi_r) / 2);
            w.multiplicity = sizes[i] * sizes[j];
            per_pair[k].push_back(std::move(w));
            run_start = -1;
        };
        for (size_t c = 0; c <= m; ++c) {
            Rat t = cell_midpoint(cuts, c);
            bool cond = md.sign_at(t) > 0 && g_sign_at(t) < 0;
            if (cond && run_start < 0) run_start = static_cast<long>(c);
            if (!cond) flush(c - 1);
        }
        flush(m);
    });

    ReversalCensus census;
    census.convention =
        "ordered raw word pairs via canonical class pairs expanded by class sizes; "
        "maximal open windows, endpoints excluded";
    for (const auto& pw : per_pair) {
        for (const auto& w : pw) {
            census.total_windows += w.multiplicity;
            census.canonical_windows += 1;
            int a = w.first.length(), b = w.second.length();
            census.counts_by_length[{std::min(a, b), std::max(a, b)}] += w.multiplicity;
            census.windows.push_back(w);
        }
    }
    std::sort(census.windows.begin(), census.windows.end(),
              [](const ReversalWindow& a, const ReversalWindow& b) {
                  if (a.midpoint != b.midpoint) return a.midpoint < b.midpoint;
                  if (!(a.first == b.first)) return a.first < b.first;
                  return a.second < b.second;
              });

    // no window contains 1/2 (fair dominance forbids it), so the gap around
    // the fair coin is bounded by the nearest window endpoints
    const Rat half = make_rat(1, 2);
    for (const auto& w : census.windows) {
        if (w.midpoint < half) {
            if (w.hi && (!census.gap_lo || compare(*w.hi, *census.gap_lo) > 0)) census.gap_lo = w.hi;
        } else {
            if (w.lo && (!census.gap_hi || compare(*w.lo, *census.gap_hi) < 0)) census.gap_hi = w.lo;
        }
    }
    return census;
}

CycleCheck verify_cycle_at(const std::array<Word, 3>& triple,
                           const std::array<BiasVector, 3>& biases) {
    CycleCheck out;
    out.legs[0] = race_exact(triple[0], triple[1], biases[0], biases[1]);
    out.legs[1] = race_exact(triple[1], triple[2], biases[1], biases[2]);
    out.legs[2] = race_exact(triple[2], triple[0], biases[2], biases[0]);
    const Rat half = make_rat(1, 2);
    out.is_cycle = out.legs[0].rtb_first() > half && out.legs[1].rtb_first() > half &&
                   out.legs[2].rtb_first() > half;
    return out;
}

ScanMode scan_mode_from_string(const std::string& name) {
    if (name == "common" || name == "common_p") return ScanMode::CommonP;
    if (name == "per-player" || name == "per_player") return ScanMode::PerPlayer;
    if (name == "simplex") return ScanMode::Simplex;
    throw DomainError("BadMode", "unknown scan mode '" + name + "'");
}

namespace {

bool has_directed_cycle(const std::vector<std::vector<int>>& sgn) {
    const size_t n = sgn.size();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            if (a == b || sgn[a][b] <= 0) continue;
            for (size_t c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (sgn[b][c] > 0 && sgn[c][a] > 0) return true;
            }
        }
    return false;
}

}  // namespace

ScanSummary scan_bias_space(const std::vector<Word>& patterns, const Rat& grid_step, ScanMode mode,
                            std::ostream* csv, int threads, const ScanOptions& options) {
    if (patterns.size() < 2) throw DomainError("BadPatterns", "scan needs at least two patterns");
    if (sign(grid_step) <= 0 || grid_step > make_rat(1, 4))
        throw DomainError("BadStep", "grid step must lie in (0, 1/4]");
    const size_t n = patterns.size();
    auto axis_for = [&](size_t dim) {
        Rat lo(0), hi(1);
        if (dim < options.axis_windows.size()) {
            lo = std::max(lo, options.axis_windows[dim].first);
            hi = std::min(hi, options.axis_windows[dim].second);
        }
        std::vector<Rat> axis;
        for (long k = 1;; ++k) {
            Rat x(grid_step * k);
            if (!(x < 1)) break;
            if (x < lo || x > hi) continue;
            axis.push_back(x);
        }
        return axis;
    };
    std::vector<Rat> axis = axis_for(0);

    ScanSummary summary;
    auto emit_header = [&](int dims) {
        if (!csv) return;
        for (int d = 0; d < dims; ++d) *csv << "p" << (d + 1) << ",";
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                *csv << "flag" << patterns[i].to_string() << "_" << patterns[j].to_string() << ",";
        *csv << "cycle\n";
    };
    auto record_point = [&](const std::vector<Rat>& coords,
                            const std::vector<std::vector<int>>& sgn) {
        bool cycle = has_directed_cycle(sgn);
        ++summary.points;
        if (cycle) ++summary.cycle_points;
        std::ostringstream row;
        for (const auto& c : coords) row << rat_to_string(c) << ",";
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) row << sgn[i][j] << ",";
        row << (cycle ? 1 : 0);
        if (csv) *csv << row.str() << "\n";
        if (cycle && summary.flagged.size() < 256) summary.flagged.push_back(row.str());
    };
    auto pair_sign = [&](size_t i, size_t j, const BiasVector& bi, const BiasVector& bj) {
        Rat w = race_exact(patterns[i], patterns[j], bi, bj).rtb_first();
        return w > make_rat(1, 2) ? 1 : (w < make_rat(1, 2) ? -1 : 0);
    };

    if (mode == ScanMode::CommonP) {
        for (const auto& w : patterns)
            if (w.alphabet_size != 2) throw DomainError("BadAlphabet", "common_p is a coin scan");
        emit_header(1);
        std::vector<std::vector<std::vector<int>>> sgns(axis.size());
        parallel_for(axis.size(), threads, [&](size_t k) {
            BiasVector b = BiasVector::coin(axis[k]);
            auto& sgn = sgns[k];
            sgn.assign(n, std::vector<int>(n, 0));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j) {
                    sgn[i][j] = pair_sign(i, j, b, b);
                    sgn[j][i] = -sgn[i][j];
                }
        });
        for (size_t k = 0; k < axis.size(); ++k) record_point({axis[k]}, sgns[k]);
        return summary;
    }

    if (mode == ScanMode::PerPlayer) {
        if (n != 3) throw DomainError("BadPatterns", "per-player scan expects exactly 3 patterns");
        for (const auto& w : patterns)
            if (w.alphabet_size != 2) throw DomainError("BadAlphabet", "per-player is a coin scan");
        emit_header(3);
        std::array<std::vector<Rat>, 3> axes{axis_for(0), axis_for(1), axis_for(2)};
        std::array<std::pair<size_t, size_t>, 3> prs{{{0, 1}, {0, 2}, {1, 2}}};
        std::array<std::vector<int>, 3> table;
        for (size_t pi = 0; pi < 3; ++pi)
            table[pi].assign(axes[prs[pi].first].size() * axes[prs[pi].second].size(), 0);
        size_t tasks = axes[0].size() + axes[0].size() + axes[1].size();
        parallel_for(tasks, threads, [&](size_t task) {
            size_t pi, ki;
            if (task < axes[0].size()) pi = 0, ki = task;
            else if (task < 2 * axes[0].size()) pi = 1, ki = task - axes[0].size();
            else pi = 2, ki = task - 2 * axes[0].size();
            auto [i, j] = prs[pi];
            const auto& cols = axes[prs[pi].second];
            BiasVector bi = BiasVector::coin(axes[prs[pi].first][ki]);
            for (size_t kj = 0; kj < cols.size(); ++kj)
                table[pi][ki * cols.size() + kj] = pair_sign(i, j, bi, BiasVector::coin(cols[kj]));
        });
        std::vector<std::vector<int>> sgn(3, std::vector<int>(3, 0));
        for (size_t a = 0; a < axes[0].size(); ++a)
            for (size_t b = 0; b < axes[1].size(); ++b)
                for (size_t c = 0; c < axes[2].size(); ++c) {
                    sgn[0][1] = table[0][a * axes[1].size() + b];
                    sgn[1][0] = -sgn[0][1];
                    sgn[0][2] = table[1][a * axes[2].size() + c];
                    sgn[2][0] = -sgn[0][2];
                    sgn[1][2] = table[2][b * axes[2].size() + c];
                    sgn[2][1] = -sgn[1][2];
                    record_point({axes[0][a], axes[1][b], axes[2][c]}, sgn);
                }
        return summary;
    }

    // simplex: one s-sided die shared by every player
    int s = patterns.front().alphabet_size;
    for (const auto& w : patterns)
        if (w.alphabet_size != s) throw DomainError("BadAlphabet", "simplex needs a common alphabet");
    if (rat_num(grid_step) != 1) throw DomainError("BadStep", "simplex grids use steps of the form 1/m");
    emit_header(s);
    long m = static_cast<long>(rat_den(grid_step).get_si());
    std::vector<long> kmin(s, 1), kmax(s, m);
    for (int d = 0; d < s && d < static_cast<int>(options.axis_windows.size()); ++d) {
        const auto& [lo, hi] = options.axis_windows[d];
        Rat lo_k(lo * m), hi_k(hi * m);
        Int lo_i, hi_i;
        mpz_cdiv_q(lo_i.get_mpz_t(), rat_num(lo_k).get_mpz_t(), rat_den(lo_k).get_mpz_t());
        mpz_fdiv_q(hi_i.get_mpz_t(), rat_num(hi_k).get_mpz_t(), rat_den(hi_k).get_mpz_t());
        kmin[d] = std::max(kmin[d], static_cast<long>(lo_i.get_si()));
        kmax[d] = std::min(kmax[d], static_cast<long>(hi_i.get_si()));
    }
    std::vector<std::vector<long>> grid;
    std::vector<long> cur(s, 0);
    std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == s - 1) {
            if (left >= kmin[pos] && left <= kmax[pos]) {
                cur[pos] = left;
                grid.push_back(cur);
            }
            return;
        }
        for (long k = kmin[pos]; k <= kmax[pos] && k + (s - 1 - pos) <= left; ++k) {
            cur[pos] = k;
            rec(pos + 1, left - k);
        }
    };
    rec(0, m);
    std::vector<std::vector<std::vector<int>>> sgns(grid.size());
    parallel_for(grid.size(), threads, [&](size_t gidx) {
        std::vector<Rat> probs;
        for (long k : grid[gidx]) probs.push_back(make_rat(k, m));
        BiasVector b = BiasVector::from_entries(probs);
        auto& sgn = sgns[gidx];
        sgn.assign(n, std::vector<int>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                sgn[i][j] = pair_sign(i, j, b, b);
                sgn[j][i] = -sgn[i][j];
            }
    });
    for (size_t gidx = 0; gidx < grid.size(); ++gidx) {
        std::vector<Rat> coords;
        for (long k : grid[gidx]) coords.push_back(make_rat(k, m));
        record_point(coords, sgns[gidx]);
    }
    return summary;
}

}  // namespace penney
