#include "doctest.h"
#include "penney/census.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace penney;

namespace {

Word W(const char* s, int alpha = 2) { return Word::parse(s, alpha); }
Rat q(const char* s) { return rat_from_string(s); }

struct TempPath {
    std::string path;
    explicit TempPath(const char* name) : path(std::string("census_test_") + name + ".jsonl") {
        std::remove(path.c_str());
    }
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("crossover db for length <= 2") {
    CrossoverDb db = CrossoverDb::build(2, "", 2);
    // classes: H, T, HH, HT(=TH), TT
    REQUIRE(db.classes().reps.size() == 5);

    size_t ihh = 0, iht = 0;
    for (size_t i = 0; i < db.classes().reps.size(); ++i) {
        if (db.classes().reps[i] == W("HH")) ihh = i;
        if (db.classes().reps[i] == W("HT")) iht = i;
    }
    const CrossoverRecord& rec = db.record(ihh, iht);
    CHECK_FALSE(rec.substring_pruned);
    REQUIRE(rec.roots.size() == 1);
    CHECK(rec.roots[0].approx_decimal(4) == "0.5866");
    CHECK(rec.sign_cells == std::vector<int>{-1, 1});
    CHECK(db.sign_between(ihh, iht, q("3/5")) == 1);
    CHECK(db.sign_between(iht, ihh, q("3/5")) == -1);
    CHECK(db.sign_between(ihh, iht, q("1/2")) == -1);

    // (H, HH) is substring-pruned with fixed orientation toward H
    size_t ih = 0;
    for (size_t i = 0; i < db.classes().reps.size(); ++i)
        if (db.classes().reps[i] == W("H")) ih = i;
    const CrossoverRecord& sub = db.record(ih, ihh);
    CHECK(sub.substring_pruned);
    CHECK(*sub.fixed_orientation == 1);
    CHECK(db.sign_between(ih, ihh, q("1/3")) == 1);
}

TEST_CASE("crossover roots match a dense sign-change oracle") {
    CrossoverDb db = CrossoverDb::build(2, "", 2);
    const auto& reps = db.classes().reps;
    for (size_t i = 0; i < reps.size(); ++i) {
        for (size_t j = i + 1; j < reps.size(); ++j) {
            const CrossoverRecord& rec = db.record(i, j);
            if (rec.substring_pruned || rec.identically_half) continue;
            // dense grid: count sign changes of the exact advantage
            int changes = 0, prev = 0;
            std::vector<Rat> grid_roots;
            Rat prev_t;
            for (int k = 1; k < 1000; ++k) {
                Rat t = make_rat(k, 1000);
                int s = rec.g.sign_at(t);
                if (s == 0) continue;
                if (prev != 0 && s != prev) ++changes;
                prev = s;
            }
            CHECK(static_cast<int>(rec.roots.size()) >= changes);
            // every root refines to 1e-6 agreement with a bracketing sign flip
            for (const auto& r : rec.roots) {
                auto t = refine(r, q("0.000001"));
                CHECK(rec.g.num().sign_at(t.lo()) * rec.g.num().sign_at(t.hi()) < 0);
            }
        }
    }
}

TEST_CASE("cells split at deduplicated roots") {
    CrossoverDb db = CrossoverDb::build(2, "", 2);
    auto cells = decompose_cells(db);
    size_t root_count = 0;
    {
        std::vector<AlgebraicNumber> all;
        for (const auto& rec : db.records())
            for (const auto& r : rec.roots) all.push_back(r);
        sort_unique(all);
        root_count = all.size();
    }
    CHECK(cells.size() == root_count + 1);
    REQUIRE(!cells.empty());
    CHECK_FALSE(cells.front().lo.has_value());
    CHECK_FALSE(cells.back().hi.has_value());
    for (size_t c = 0; c + 1 < cells.size(); ++c) {
        REQUIRE(cells[c].hi.has_value());
        CHECK(compare(*cells[c].hi, cells[c].midpoint) > 0);
        CHECK(compare(*cells[c + 1].lo, cells[c + 1].midpoint) < 0);
    }
    // an empty db decomposes into the single cell (0,1)
    auto one = decompose_cells(CrossoverDb{});
    REQUIRE(one.size() == 1);
    CHECK(one[0].midpoint == q("1/2"));
    CHECK_FALSE(one[0].lo.has_value());
    CHECK_FALSE(one[0].hi.has_value());

    // the single length-1 pair (H, T) crosses at exactly the fair coin
    CrossoverDb tiny = CrossoverDb::build(1, "", 1);
    auto two = decompose_cells(tiny);
    REQUIRE(two.size() == 2);
    auto r = two[0].hi->exact_rational();
    REQUIRE(r.has_value());
    CHECK(*r == q("1/2"));
}

TEST_CASE("db persistence: append once, resume on rebuild") {
    TempPath tmp("resume");
    CrossoverDb first = CrossoverDb::build(2, tmp.path, 2);
    std::ifstream in(tmp.path);
    size_t lines = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    CHECK(lines == first.records().size());

    // rebuild must parse the same records and append nothing
    CrossoverDb second = CrossoverDb::build(2, tmp.path, 2);
    std::ifstream in2(tmp.path);
    size_t lines2 = 0;
    while (std::getline(in2, line))
        if (!line.empty()) ++lines2;
    CHECK(lines2 == lines);
    REQUIRE(second.records().size() == first.records().size());
    for (size_t r = 0; r < first.records().size(); ++r) {
        CHECK(first.records()[r].g == second.records()[r].g);
        CHECK(first.records()[r].sign_cells == second.records()[r].sign_cells);
        CHECK(first.records()[r].roots.size() == second.records()[r].roots.size());
    }
    // growing max_len reuses the cached pairs and appends only new ones
    CrossoverDb third = CrossoverDb::build(3, tmp.path, 2);
    CHECK(third.records().size() > first.records().size());
}

TEST_CASE("parallel and sequential db builds are byte-identical") {
    TempPath a("seq"), b("par");
    CrossoverDb::build(3, a.path, 1);
    CrossoverDb::build(3, b.path, 2);
    std::ifstream fa(a.path), fb(b.path);
    std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(ca == cb);
    CHECK(!ca.empty());
}

TEST_CASE("no cycle families up to length 4") {
    auto families = find_cycle_families(4, "", 2);
    CHECK(families.empty());
}

TEST_CASE("verify_cycle_at fixtures") {
    // three-sided die cycle at the witness point
    BiasVector die = BiasVector::from_entries({q("624/1468"), q("399/1468"), q("445/1468")});
    auto check = verify_cycle_at({W("000", 3), W("020", 3), W("001", 3)}, {die, die, die});
    CHECK(check.is_cycle);
    for (const auto& leg : check.legs) CHECK(leg.rtb_first() > q("1/2"));

    // independent coins with decreasing means
    auto coins = verify_cycle_at({W("HHH"), W("HTH"), W("HHT")},
                                 {BiasVector::coin(q("0.61")), BiasVector::coin(q("0.71")),
                                  BiasVector::coin(q("0.51"))});
    CHECK(coins.is_cycle);
    Rat ma = expected_waiting(W("HHH"), BiasVector::coin(q("0.61")));
    Rat mb = expected_waiting(W("HTH"), BiasVector::coin(q("0.71")));
    Rat mc = expected_waiting(W("HHT"), BiasVector::coin(q("0.51")));
    CHECK(ma > mb);
    CHECK(mb > mc);

    // equal words with equal biases tie one leg at exactly 1/2
    BiasVector fair = BiasVector::fair(2);
    auto degenerate = verify_cycle_at({W("HH"), W("HH"), W("HT")}, {fair, fair, fair});
    CHECK_FALSE(degenerate.is_cycle);
    CHECK(degenerate.legs[0].rtb_first() == q("1/2"));
}

TEST_CASE("reversal census counts for small lengths") {
    auto census2 = find_reversal_windows(2, "", 2);
    CHECK(census2.total_windows == 6);
    CHECK(census2.counts_by_length[{2, 2}] == 4);
    CHECK(census2.counts_by_length[{1, 2}] == 2);
    CHECK(census2.counts_by_length[{1, 1}] == 0);
    // the known length-2 reversal window sits between the threshold sextic
    // root and the golden-ratio conjugate
    bool found = false;
    for (const auto& w : census2.windows) {
        if (w.first == W("HT") && w.second == W("HH")) {
            found = true;
            REQUIRE(w.lo.has_value());
            REQUIRE(w.hi.has_value());
            CHECK(w.lo->approx_decimal(6) == "0.586648");
            CHECK(w.hi->approx_decimal(6) == "0.618034");
        }
    }
    CHECK(found);
    // gap around the fair coin
    REQUIRE(census2.gap_lo.has_value());
    REQUIRE(census2.gap_hi.has_value());
    CHECK(census2.gap_lo->approx_decimal(6) == "0.413352");
    CHECK(census2.gap_hi->approx_decimal(6) == "0.586648");

    auto census3 = find_reversal_windows(3, "", 2);
    CHECK(census3.total_windows == 36);
}

TEST_CASE("per-player scan of a length-2 triple finds no cycles") {
    std::vector<Word> triple{W("HH"), W("HT"), W("TT")};
    auto summary = scan_bias_space(triple, q("1/10"), ScanMode::PerPlayer, nullptr, 2);
    CHECK(summary.points == 9 * 9 * 9);
    CHECK(summary.cycle_points == 0);
}

TEST_CASE("simplex scan of the 3-die triple") {
    std::vector<Word> triple{W("000", 3), W("020", 3), W("001", 3)};
    std::ostringstream csv;
    auto summary = scan_bias_space(triple, q("1/100"), ScanMode::Simplex, &csv, 2);
    CHECK(summary.points == 99 * 98 / 2);
    // the cycle region is a shell thinner than 1/100: the full-resolution
    // grid steps over it (the witness cycle margins are below 1e-4)
    CHECK(summary.cycle_points == 0);
    std::string text = csv.str();
    CHECK(text.rfind("p1,p2,p3,flag000_020,flag000_001,flag020_001,cycle\n", 0) == 0);
    size_t rows = std::count(text.begin(), text.end(), '\n');
    CHECK(rows == static_cast<size_t>(summary.points) + 1);

    // zooming near the witness exposes the region as grid evidence
    ScanOptions opt;
    opt.axis_windows = {{q("0.42495"), q("0.42515")}, {q("0.27170"), q("0.27188")}};
    auto zoom = scan_bias_space(triple, q("1/200000"), ScanMode::Simplex, nullptr, 2, opt);
    CHECK(zoom.cycle_points > 0);
    bool near = false;
    for (const auto& row : zoom.flagged) {
        std::istringstream is(row);
        std::string tok;
        std::getline(is, tok, ',');
        Rat u = rat_from_string(tok);
        std::getline(is, tok, ',');
        Rat v = rat_from_string(tok);
        if (rat_abs(u - q("624/1468")) <= q("1/1000") && rat_abs(v - q("399/1468")) <= q("1/1000"))
            near = true;
    }
    CHECK(near);
}

TEST_CASE("per-player zoom shows the independent-coin arch") {
    std::vector<Word> triple{W("HHH"), W("HTH"), W("HHT")};
    ScanOptions opt;
    opt.axis_windows = {{q("0.605"), q("0.615")}, {q("0.705"), q("0.715")}, {q("0.505"), q("0.515")}};
    auto zoom = scan_bias_space(triple, q("1/1000"), ScanMode::PerPlayer, nullptr, 2, opt);
    CHECK(zoom.points == 11 * 11 * 11);
    CHECK(zoom.cycle_points > 0);
}

TEST_CASE("common bias scan around the length-5 cycle window") {
    std::vector<Word> triple{W("TT"), W("HHHHH"), W("HHHHT")};
    auto summary = scan_bias_space(triple, q("1/25"), ScanMode::CommonP, nullptr, 2);
    // step 1/25 misses the narrow (0.72097, 0.72283) window
    CHECK(summary.points == 24);
    CHECK(summary.cycle_points == 0);
    // but the window midpoint region shows the cycle orientation directly
    BiasVector b = BiasVector::coin(q("0.7219"));
    auto check = verify_cycle_at({W("TT"), W("HHHHH"), W("HHHHT")}, {b, b, b});
    CHECK(check.is_cycle);
}

namespace {

// region polynomials of the 3-die cycle, transcribed term by term;
// sign(+-P) must agree with the exact pairwise advantages at rational points
struct BiTerm {
    long c;
    int i, j;
};

Rat eval_terms(const std::vector<BiTerm>& terms, const Rat& u, const Rat& v) {
    Rat acc(0);
    for (const auto& t : terms) {
        Rat m(t.c);
        for (int k = 0; k < t.i; ++k) m *= u;
        for (int k = 0; k < t.j; ++k) m *= v;
        acc += m;
    }
    return acc;
}

const std::vector<BiTerm> kP000020 = {
    {1, 13, 0},  {3, 12, 1},   {3, 11, 2},  {1, 10, 3},  {-6, 12, 0}, {-15, 11, 1}, {-12, 10, 2},
    {-3, 9, 3},  {14, 11, 0},  {27, 10, 1}, {15, 9, 2},  {2, 8, 3},   {-15, 10, 0}, {-18, 9, 1},
    {-3, 8, 2},  {1, 7, 3},    {6, 9, 0},   {-1, 8, 1},  {-5, 7, 2},  {-1, 6, 3},   {-1, 8, 0},
    {1, 7, 1},   {5, 7, 0},    {7, 6, 1},   {2, 5, 2},   {-4, 6, 0},  {-1, 5, 1},   {1, 4, 2},
    {-2, 5, 0},  {-4, 4, 1},   {-1, 3, 2},  {3, 4, 0},   {2, 3, 1},   {-1, 3, 0},   {-1, 2, 0},
    {-1, 1, 1},  {-1, 1, 0},   {-1, 0, 1},  {1, 0, 0}};

const std::vector<BiTerm> kP020001 = {
    {1, 12, 3}, {3, 11, 4},  {3, 10, 5},  {1, 9, 6},  {-5, 11, 3}, {-12, 10, 4}, {-9, 9, 5},
    {-2, 8, 6}, {10, 10, 3}, {18, 9, 4},  {9, 8, 5},  {1, 7, 6},   {-10, 9, 3},  {-12, 8, 4},
    {-3, 7, 5}, {-1, 9, 2},  {2, 8, 3},   {-1, 6, 5}, {3, 8, 2},   {5, 7, 3},    {3, 6, 4},
    {3, 6, 3},  {3, 5, 4},   {-7, 6, 2},  {-10, 5, 3}, {-2, 4, 4}, {7, 5, 2},    {4, 4, 3},
    {2, 5, 1},  {2, 4, 2},   {2, 3, 3},   {-4, 4, 1}, {-4, 3, 2},  {2, 3, 1},    {1, 2, 1},
    {1, 1, 2},  {-1, 1, 1},  {-1, 1, 0},  {-2, 0, 1}, {1, 0, 0}};

const std::vector<BiTerm> kP001000 = {
    {1, 12, 3}, {-2, 11, 3}, {1, 10, 3}, {1, 8, 2}, {-2, 7, 2}, {-1, 6, 2}, {2, 5, 2},
    {-1, 5, 1}, {-1, 4, 1},  {1, 2, 1},  {1, 1, 1}, {-1, 1, 0}, {1, 0, 1}};

}  // namespace

TEST_CASE("region polynomials agree with exact win signs pointwise") {
    Word A = W("000", 3), B = W("020", 3), C = W("001", 3);
    const std::pair<const char*, const char*> points[] = {
        {"624/1468", "399/1468"}, {"1/3", "1/3"},   {"1/2", "1/4"},
        {"1/10", "6/10"},         {"42/100", "27/100"}};
    for (const auto& [us, vs] : points) {
        Rat u = q(us), v = q(vs);
        Rat w(1 - u - v);
        REQUIRE(sign(w) > 0);
        BiasVector b = BiasVector::from_entries({u, v, w});
        auto g_sign = [&](const Word& x, const Word& y) {
            Rat val(race_exact(x, y, b, b).rtb_first() - q("1/2"));
            return sign(val);
        };
        CHECK(g_sign(A, B) == -sign(eval_terms(kP000020, u, v)));
        CHECK(g_sign(B, C) == sign(eval_terms(kP020001, u, v)));
        CHECK(g_sign(C, A) == sign(eval_terms(kP001000, u, v)));
    }
}

TEST_CASE("cells are sign-constant for every pair") {
    CrossoverDb db = CrossoverDb::build(3, "", 2);
    auto cells = decompose_cells(db);
    const auto& reps = db.classes().reps;
    for (const auto& cell : cells) {
        // three distinct rational probes inside the open cell
        Rat lo = cell.lo ? Rat(cell.lo->hi()) : Rat(0);
        Rat hi = cell.hi ? Rat(cell.hi->lo()) : Rat(1);
        std::vector<Rat> probes{Rat(lo + (hi - lo) / 4), Rat(lo + (hi - lo) / 2),
                                Rat(lo + Rat(3) * (hi - lo) / 4)};
        for (size_t i = 0; i < reps.size(); ++i) {
            for (size_t j = i + 1; j < reps.size(); ++j) {
                const CrossoverRecord& rec = db.record(i, j);
                if (rec.substring_pruned || rec.identically_half) continue;
                int s0 = rec.g.sign_at(probes[0]);
                CHECK(s0 == rec.g.sign_at(probes[1]));
                CHECK(s0 == rec.g.sign_at(probes[2]));
                CHECK(s0 == db.sign_between(i, j, probes[1]));
            }
        }
    }
}

TEST_CASE("reversal windows mirror under complement") {
    auto census = find_reversal_windows(3, "", 2);
    for (const auto& w : census.windows) {
        Word cu = canonical_representative(w.first.complemented());
        Word cv = canonical_representative(w.second.complemented());
        Rat mirrored(1 - w.midpoint);
        bool found = false;
        for (const auto& other : census.windows) {
            if (!(other.first == cu) || !(other.second == cv)) continue;
            bool above = !other.lo || compare(*other.lo, mirrored) < 0;
            bool below = !other.hi || compare(*other.hi, mirrored) > 0;
            if (above && below) {
                found = true;
                CHECK(other.multiplicity == w.multiplicity);
                break;
            }
        }
        CHECK(found);
    }
}
