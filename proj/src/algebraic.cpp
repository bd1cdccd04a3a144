#include "penney/algebraic.hpp"

#include <algorithm>
#include <numeric>

namespace penney {

SturmChain::SturmChain(const ZPoly& p) {
    chain_.push_back(p);
    if (p.degree() < 1) return;
    chain_.push_back(p.derivative());
    while (chain_.back().degree() > 0) {
        const ZPoly& a = chain_[chain_.size() - 2];
        const ZPoly& b = chain_.back();
        ZPoly r = pseudo_rem(a, b);
        if (r.is_zero()) break;
        // prem scales a by lc(b)^(delta+1); the Sturm element is -rem(a,b)
        // up to a positive constant, so flip according to that scale's sign
        int delta = a.degree() - b.degree();
        bool scale_positive = sign(b.leading()) > 0 || (delta + 1) % 2 == 0;
        ZPoly next = scale_positive ? -r : r;
        next = next.primitive_part();
        chain_.push_back(std::move(next));
    }
}

int SturmChain::variations_at(const Rat& x) const {
    int var = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_open(const Rat& a, const Rat& b) const {
    // (a, b) with non-root endpoints: V(a) - V(b)
    return variations_at(a) - variations_at(b);
}

AlgebraicNumber::AlgebraicNumber(ZPoly minpoly, Rat lo, Rat hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_)) throw std::logic_error("algebraic number: empty interval");
    sign_lo_ = minpoly_.sign_at(lo_);
    if (sign_lo_ == 0 || minpoly_.sign_at(hi_) == 0)
        throw std::logic_error("algebraic number: endpoint is a root");
}

AlgebraicNumber AlgebraicNumber::from_rat(const Rat& q) {
    // root of den*x - num in (q - 1/2, q + 1/2)
    ZPoly p(std::vector<Int>{Int(-rat_num(q)), rat_den(q)});
    return AlgebraicNumber(p, Rat(q - make_rat(1, 2)), Rat(q + make_rat(1, 2)));
}

std::optional<Rat> AlgebraicNumber::exact_rational() const {
    if (minpoly_.degree() == 1) return make_rat(-minpoly_[0], minpoly_[1]);
    return std::nullopt;
}

void AlgebraicNumber::refine_step() {
    Rat m = midpoint();
    int sm = minpoly_.sign_at(m);
    if (sm == 0) {
        // the root is exactly m; shrink symmetrically, endpoints off the root
        Rat w = Rat((hi_ - lo_) / 8);
        while (minpoly_.sign_at(Rat(m - w)) == 0 || minpoly_.sign_at(Rat(m + w)) == 0) w /= 2;
        lo_ = Rat(m - w);
        hi_ = Rat(m + w);
        sign_lo_ = minpoly_.sign_at(lo_);
        return;
    }
    if (sm == sign_lo_) lo_ = m;
    else hi_ = m;
}

void AlgebraicNumber::refine_to(const Rat& w) {
    while (width() > w) refine_step();
}

double AlgebraicNumber::approx_double() const {
    AlgebraicNumber t = *this;
    t.refine_to(make_rat(Int(1), int_pow(Int(2), 64)));
    return t.midpoint().get_d();
}

std::string AlgebraicNumber::approx_decimal(int digits) const {
    AlgebraicNumber t = *this;
    Rat w = make_rat(Int(1), int_pow(Int(10), static_cast<unsigned long>(digits + 2)));
    t.refine_to(w);
    return rat_to_decimal(t.midpoint(), digits);
}

namespace {

void isolate_rec(const SturmChain& chain, const ZPoly& ps, const Rat& a, const Rat& b,
                 std::vector<AlgebraicNumber>& out) {
    int n = chain.count_open(a, b);
    if (n == 0) return;
    Rat m((a + b) / 2);
    if (n == 1 && ps.sign_at(m) != 0) {
        out.emplace_back(ps, a, b);
        return;
    }
    if (ps.sign_at(m) == 0) {
        // rational root exactly at the midpoint: carve out a tight interval
        // and keep the root with its linear minimal polynomial
        Rat w((b - a) / 8);
        while (ps.sign_at(Rat(m - w)) == 0 || ps.sign_at(Rat(m + w)) == 0 ||
               chain.count_open(Rat(m - w), Rat(m + w)) != 1)
            w /= 2;
        isolate_rec(chain, ps, a, Rat(m - w), out);
        out.emplace_back(ZPoly(std::vector<Int>{Int(-rat_num(m)), rat_den(m)}), Rat(m - w),
                         Rat(m + w));
        isolate_rec(chain, ps, Rat(m + w), b, out);
        return;
    }
    isolate_rec(chain, ps, a, m, out);
    isolate_rec(chain, ps, m, b, out);
}

}  // namespace

std::vector<AlgebraicNumber> isolate_real_roots(const ZPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "cannot isolate roots of the zero polynomial");
    if (!(lo < hi)) throw DomainError("BadInterval", "isolation interval must satisfy lo < hi");
    if (p.degree() < 1) return {};
    ZPoly ps = squarefree_part(p);
    // deflate roots sitting exactly on an endpoint (excluded by openness)
    for (const Rat& e : {lo, hi}) {
        while (!ps.is_zero() && ps.degree() >= 1 && ps.sign_at(e) == 0)
            ps = divexact(ps, ZPoly(std::vector<Int>{Int(-rat_num(e)), rat_den(e)}));
    }
    if (ps.degree() < 1) return {};
    SturmChain chain(ps);
    std::vector<AlgebraicNumber> out;
    isolate_rec(chain, ps, lo, hi, out);
    return out;
}

AlgebraicNumber refine(AlgebraicNumber a, const Rat& w) {
    if (sign(w) <= 0) throw DomainError("BadWidth", "refinement width must be positive");
    a.refine_to(w);
    return a;
}

int compare(const AlgebraicNumber& a, const Rat& q) {
    if (q <= a.lo()) return +1;
    if (q >= a.hi()) return -1;
    // q strictly inside the isolating interval
    if (a.minpoly().sign_at(q) == 0) return 0;
    AlgebraicNumber t = a;
    while (q > t.lo() && q < t.hi()) t.refine_step();
    return q <= t.lo() ? +1 : -1;
}

namespace {

// decides whether the isolated point r (a root of a.minpoly) equals a's root
bool same_root(const AlgebraicNumber& a, AlgebraicNumber r) {
    while (true) {
        if (r.lo() >= a.lo() && r.hi() <= a.hi()) return true;
        if (r.hi() <= a.lo() || r.lo() >= a.hi()) return false;
        r.refine_step();
    }
}

}  // namespace

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return +1;
    // quick refinement usually separates distinct roots
    AlgebraicNumber x = a, y = b;
    for (int i = 0; i < 32 && !(x.hi() <= y.lo() || y.hi() <= x.lo()); ++i) {
        x.refine_step();
        y.refine_step();
    }
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return +1;
    // still overlapping: settle equality with a gcd certificate
    ZPoly g = poly_gcd(x.minpoly(), y.minpoly());
    if (g.degree() >= 1) {
        Rat span_lo = std::min(x.lo(), y.lo()) - 1;
        Rat span_hi = std::max(x.hi(), y.hi()) + 1;
        for (const auto& r : isolate_real_roots(g, span_lo, span_hi)) {
            if (same_root(x, r) && same_root(y, r)) return 0;
        }
    }
    while (!(x.hi() <= y.lo() || y.hi() <= x.lo())) {
        x.refine_step();
        y.refine_step();
    }
    return x.hi() <= y.lo() ? -1 : +1;
}

std::vector<size_t> sort_unique(std::vector<AlgebraicNumber>& xs) {
    std::vector<size_t> order(xs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return compare(xs[i], xs[j]) < 0; });
    std::vector<AlgebraicNumber> uniq;
    std::vector<size_t> remap(xs.size());
    for (size_t k = 0; k < order.size(); ++k) {
        if (!uniq.empty() && compare(uniq.back(), xs[order[k]]) == 0) {
            remap[order[k]] = uniq.size() - 1;
        } else {
            uniq.push_back(xs[order[k]]);
            remap[order[k]] = uniq.size() - 1;
        }
    }
    for (size_t i = 0; i + 1 < uniq.size(); ++i) {
        while (!(uniq[i].hi() <= uniq[i + 1].lo())) {
            uniq[i].refine_step();
            uniq[i + 1].refine_step();
        }
    }
    xs = std::move(uniq);
    return remap;
}

}  // namespace penney
