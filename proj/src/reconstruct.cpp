#include "penney/reconstruct.hpp"

#include <algorithm>

namespace penney {

namespace {

using QVec = std::vector<Rat>;

void trim(QVec& v) {
    while (!v.empty() && sign(v.back()) == 0) v.pop_back();
}

QVec mul(const QVec& a, const QVec& b) {
    if (a.empty() || b.empty()) return {};
    QVec r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QVec sub(const QVec& a, const QVec& b) {
    QVec r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

void divmod(const QVec& a, const QVec& b, QVec& q, QVec& r) {
    r = a;
    trim(r);
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, Rat(0));
    for (size_t k = r.size(); k >= b.size(); --k) {
        size_t top = k - 1;
        if (sign(r[top]) == 0) continue;
        Rat c(r[top] / b.back());
        size_t base = top - (b.size() - 1);
        q[base] = c;
        for (size_t i = 0; i < b.size(); ++i) r[base + i] -= c * b[i];
    }
    trim(r);
    trim(q);
}

ZPoly clear_denominators(const QVec& f, Int& multiplier) {
    multiplier = 1;
    for (const auto& q : f) mpz_lcm(multiplier.get_mpz_t(), multiplier.get_mpz_t(), rat_den(q).get_mpz_t());
    std::vector<Int> c(f.size());
    for (size_t i = 0; i < f.size(); ++i) c[i] = rat_num(f[i]) * Int(multiplier / rat_den(f[i]));
    return ZPoly(std::move(c));
}

}  // namespace

RatFunc reconstruct(const std::vector<std::pair<Rat, Rat>>& samples, int dn, int dd) {
    if (dn < 0 || dd < 0) throw DomainError("ReconstructionFailed", "negative degree bound");
    const size_t m = static_cast<size_t>(dn + dd + 2);
    if (samples.size() < m)
        throw DomainError("ReconstructionFailed",
                          "need at least " + std::to_string(m) + " samples, got " +
                              std::to_string(samples.size()));
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw DomainError("ReconstructionFailed", "duplicate sample points");

    // Newton interpolation of the first m samples
    QVec xs(m), ddc(m);
    for (size_t i = 0; i < m; ++i) {
        xs[i] = samples[i].first;
        ddc[i] = samples[i].second;
    }
    for (size_t level = 1; level < m; ++level)
        for (size_t i = m - 1; i >= level; --i) {
            ddc[i] = Rat((ddc[i] - ddc[i - 1]) / (xs[i] - xs[i - level]));
            if (i == level) break;
        }
    QVec F;
    for (size_t i = m; i-- > 0;) {
        QVec nxt(F.size() + 1, Rat(0));
        for (size_t j = 0; j < F.size(); ++j) {
            nxt[j + 1] += F[j];
            nxt[j] -= F[j] * xs[i];
        }
        F = std::move(nxt);
        if (F.empty()) F.emplace_back(0);
        F[0] += ddc[i];
        trim(F);
    }
    QVec M{Rat(1)};
    for (const Rat& x : xs) {
        QVec nxt(M.size() + 1, Rat(0));
        for (size_t j = 0; j < M.size(); ++j) {
            nxt[j + 1] += M[j];
            nxt[j] -= M[j] * x;
        }
        M = std::move(nxt);
    }

    // extended Euclid on (M, F); stop at the first remainder of degree <= dn
    QVec r0 = M, r1 = F, v0, v1{Rat(1)};
    trim(r1);
    while (!r1.empty() && static_cast<int>(r1.size()) - 1 > dn) {
        QVec q, r;
        divmod(r0, r1, q, r);
        QVec v = sub(v0, mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        v0 = std::move(v1);
        v1 = std::move(v);
        if (!r1.empty()) {  // monic normalization keeps coefficient growth down
            Rat lc = r1.back();
            for (auto& c : r1) c /= lc;
            for (auto& c : v1) c /= lc;
        }
    }
    trim(v1);
    if (v1.empty()) throw DomainError("ReconstructionFailed", "degenerate Euclidean step");
    if (static_cast<int>(v1.size()) - 1 > dd)
        throw DomainError("ReconstructionFailed", "denominator degree exceeds bound");

    Int mn, md;
    ZPoly N = clear_denominators(r1, mn);
    ZPoly D = clear_denominators(v1, md);
    RatFunc f(N * md, D * mn);
    if (f.num().degree() > dn || f.den().degree() > dd)
        throw DomainError("ReconstructionFailed", "degree bound exceeded after reduction");

    // every sample, including held-out ones past the fit window, must match
    for (const auto& [x, y] : samples) {
        if (f.den().sign_at(x) == 0)
            throw DomainError("ReconstructionFailed", "fit has a pole at a sample point");
        if (f.eval(x) != y) throw DomainError("ReconstructionFailed", "held-out sample mismatch");
    }
    return f;
}

}  // namespace penney
