#pragma once

#include <optional>
#include <string>
#include <vector>

#include "penney/poly.hpp"

namespace penney {

/// Sturm chain of a squarefree polynomial; certificate backbone for all
/// root counting done in this project.
class SturmChain {
public:
    explicit SturmChain(const ZPoly& squarefree);
    /// Number of real roots in the open interval (a, b); requires that
    /// neither endpoint is a root.
    int count_open(const Rat& a, const Rat& b) const;
    int variations_at(const Rat& x) const;
    const ZPoly& poly() const { return chain_.front(); }

private:
    std::vector<ZPoly> chain_;
};

/// Exact real algebraic number: a squarefree primitive integer polynomial
/// with exactly one real root in the open isolating interval (lo, hi),
/// neither endpoint a root.
class AlgebraicNumber {
public:
    AlgebraicNumber(ZPoly minpoly, Rat lo, Rat hi);

    /// Exact rational embedded as a degree-1 algebraic number.
    static AlgebraicNumber from_rat(const Rat& q);

    const ZPoly& minpoly() const { return minpoly_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return Rat(hi_ - lo_); }
    Rat midpoint() const { return Rat((lo_ + hi_) / 2); }

    /// True when the root is rational (degree-1 minimal polynomial after
    /// factoring out the root is not attempted; only deg-1 is detected).
    std::optional<Rat> exact_rational() const;

    /// Shrinks the isolating interval by bisection until width <= w.
    void refine_to(const Rat& w);
    /// One bisection step.
    void refine_step();

    double approx_double() const;
    std::string approx_decimal(int digits) const;

private:
    int sign_lo_ = 0;
    ZPoly minpoly_;
    Rat lo_, hi_;
};

/// All real roots of p in the open interval (lo, hi), ascending, with
/// pairwise disjoint isolating intervals. p need not be squarefree.
std::vector<AlgebraicNumber> isolate_real_roots(const ZPoly& p, const Rat& lo, const Rat& hi);

/// refine(a, width) from the spec: same root, interval width <= w.
AlgebraicNumber refine(AlgebraicNumber a, const Rat& w);

/// -1 / 0 / +1 for a <=> q.
int compare(const AlgebraicNumber& a, const Rat& q);
/// -1 / 0 / +1 for a <=> b; equality is decided via a gcd certificate.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Sorts and deduplicates algebraic numbers; after the call intervals of
/// distinct survivors are pairwise disjoint. Returns, for each input index,
/// the index of the surviving representative.
std::vector<size_t> sort_unique(std::vector<AlgebraicNumber>& xs);

}  // namespace penney
