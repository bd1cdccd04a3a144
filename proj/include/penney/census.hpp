#pragma once

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "penney/race.hpp"
#include "penney/words.hpp"

namespace penney {

/// Advantage data for one unordered canonical pair. Substring pairs are
/// pruned: orientation is fixed without a root search and no symbolic
/// advantage is stored.
struct CrossoverRecord {
    Word first, second;  // canonical, first < second by (length, lex)
    bool identically_half = false;
    bool substring_pruned = false;
    RatFunc g;                           // advantage of first over second (rtb)
    std::vector<AlgebraicNumber> roots;  // zeros of g in (0,1), ascending
    std::vector<int> sign_cells;         // sign of g between consecutive roots
    std::optional<int> fixed_orientation;  // set when g keeps one sign on (0,1)
};

/// Crossover database over all canonical pairs up to max_len, persisted as
/// JSON lines keyed by (pair, convention); reruns resume by skipping
/// present keys.
class CrossoverDb {
public:
    /// db_path may be empty (no persistence).
    static CrossoverDb build(int max_len, const std::string& db_path, int threads);

    int max_len() const { return max_len_; }
    const PatternClasses& classes() const { return classes_; }
    const std::vector<CrossoverRecord>& records() const { return records_; }
    /// Index of the record for the unordered pair of representative indices.
    const CrossoverRecord& record(size_t i, size_t j) const;
    /// Sign of g_{reps[i] beats reps[j]} on the record's own cell containing
    /// the given point (the point must avoid the pair's roots).
    int sign_between(size_t i, size_t j, const Rat& point) const;

private:
    int max_len_ = 0;
    PatternClasses classes_;
    std::vector<CrossoverRecord> records_;
    std::map<std::pair<size_t, size_t>, size_t> index_;
};

/// Open interval of the bias axis free of every tracked crossover point.
struct Cell {
    std::optional<AlgebraicNumber> lo, hi;  // nullopt = exact endpoint 0 / 1
    Rat midpoint;
};

std::vector<Cell> decompose_cells(const CrossoverDb& db);

struct CycleFamily {
    std::array<Word, 3> triple;  // oriented A -> B -> C -> A
    std::optional<AlgebraicNumber> window_lo, window_hi;
    Rat window_midpoint;
    std::string equivalence;
};

/// Directed 3-cycles of the head-to-head tournament, as maximal bias
/// windows, deduplicated up to profile, reversal, cyclic rotation, and
/// complement-with-mirrored-bias; representatives reported on p >= 1/2.
std::vector<CycleFamily> find_cycle_families(int max_len, const std::string& db_path, int threads);

struct ReversalWindow {
    Word first, second;  // ordered canonical pair: first has the smaller mean
    std::optional<AlgebraicNumber> lo, hi;
    Rat midpoint;
    long multiplicity = 1;  // raw ordered word pairs represented
};

struct ReversalCensus {
    std::vector<ReversalWindow> windows;
    long total_windows = 0;      // with raw-pair multiplicities
    long canonical_windows = 0;  // one per canonical ordered pair window
    std::map<std::pair<int, int>, long> counts_by_length;  // unordered {len, len}
    std::optional<AlgebraicNumber> gap_lo, gap_hi;  // no-reversal gap around 1/2
    std::string convention;
};

ReversalCensus find_reversal_windows(int max_len, const std::string& db_path, int threads);

struct CycleCheck {
    bool is_cycle = false;
    std::array<RaceResult, 3> legs;  // A vs B, B vs C, C vs A
};

CycleCheck verify_cycle_at(const std::array<Word, 3>& triple,
                           const std::array<BiasVector, 3>& biases);

enum class ScanMode { CommonP, PerPlayer, Simplex };

ScanMode scan_mode_from_string(const std::string& name);

struct ScanSummary {
    long points = 0;
    long cycle_points = 0;
    std::vector<std::string> flagged;  // first flagged bias tuples, as csv rows
};

/// Optional zoom: per-axis closed ranges restricting the grid (the cycle
/// regions can be thin shells that full-resolution grids step over).
struct ScanOptions {
    std::vector<std::pair<Rat, Rat>> axis_windows;
};

/// Exact orientation scan over a bias grid; optionally streams one CSV row
/// per grid point. grid_step must lie in (0, 1/4] (the step bound applies to
/// the grid spacing, windows may be arbitrarily tight).
ScanSummary scan_bias_space(const std::vector<Word>& patterns, const Rat& grid_step, ScanMode mode,
                            std::ostream* csv, int threads, const ScanOptions& options = {});

}  // namespace penney
