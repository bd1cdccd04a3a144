#include "penney/poly.hpp"

#include <sstream>

namespace penney {

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const Int& k) const {
    if (k == 0) return ZPoly();
    ZPoly r = *this;
    for (auto& v : r.c_) v *= k;
    return r;
}

ZPoly ZPoly::derivative() const {
    if (degree() <= 0) return ZPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return ZPoly(std::move(r));
}

Int ZPoly::content() const {
    Int g(0);
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    Int g = content();
    ZPoly r = *this;
    for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

Int ZPoly::eval_int(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat ZPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int ZPoly::sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    // sign(p(a/b)) = sign(sum c_i a^i b^(d-i)) for b > 0
    const Int a = rat_num(x), b = rat_den(x);
    Int acc(0), bp(1);
    std::vector<Int> apow(c_.size());
    Int ap(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        apow[i] = ap;
        ap *= a;
    }
    for (size_t i = c_.size(); i-- > 0;) {
        acc += c_[i] * apow[i] * bp;
        bp *= b;
    }
    return sign(acc);
}

ZPoly ZPoly::compose_one_minus_x() const {
    // Horner with (1 - x) steps
    ZPoly one_minus_x{1, -1};
    ZPoly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * one_minus_x + ZPoly::constant(c_[i]);
    return acc;
}

std::string ZPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& v = c_[i];
        if (v == 0) continue;
        if (!first) os << (sign(v) > 0 ? " + " : " - ");
        else if (sign(v) < 0) os << "-";
        Int a = abs(v);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DomainError("DivisionByZero", "pseudo remainder by zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<Int> r(a.coeffs());
    const int db = b.degree();
    const Int& lb = b.leading();
    int dr = a.degree();
    int steps = dr - db + 1;
    while (dr >= db && steps > 0) {
        // r = lb * r - r[dr] * x^(dr-db) * b
        Int lead = r[dr];
        for (auto& v : r) v *= lb;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= lead * b[i];
        while (dr >= 0 && r[dr] == 0) --dr;
        --steps;
    }
    // remaining multiplications to reach lb^(deg a - deg b + 1) scaling
    if (steps > 0) {
        Int extra = int_pow(lb, static_cast<unsigned long>(steps));
        for (auto& v : r) v *= extra;
    }
    r.resize(dr + 1);
    return ZPoly(std::move(r));
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DomainError("DivisionByZero", "division by zero polynomial");
    if (a.is_zero()) return ZPoly();
    int da = a.degree(), db = b.degree();
    if (da < db) throw std::logic_error("divexact: degree mismatch");
    std::vector<Int> r(a.coeffs());
    std::vector<Int> q(da - db + 1, Int(0));
    for (int k = da - db; k >= 0; --k) {
        if (r[k + db] == 0) continue;
        Int qk;
        if (!mpz_divisible_p(r[k + db].get_mpz_t(), b.leading().get_mpz_t()))
            throw std::logic_error("divexact: inexact division");
        mpz_divexact(qk.get_mpz_t(), r[k + db].get_mpz_t(), b.leading().get_mpz_t());
        q[k] = qk;
        for (int i = 0; i <= db; ++i) r[k + i] -= qk * b[i];
    }
    for (const auto& v : r)
        if (v != 0) throw std::logic_error("divexact: nonzero remainder");
    return ZPoly(std::move(q));
}

ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() && b.is_zero()) return ZPoly();
    if (a.is_zero()) {
        ZPoly g = b.primitive_part() * b.content();
        return sign(g.leading()) < 0 ? -g : g;
    }
    if (b.is_zero()) {
        ZPoly g = a.primitive_part() * a.content();
        return sign(g.leading()) < 0 ? -g : g;
    }
    Int ca = a.content(), cb = b.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

    ZPoly A = a.primitive_part(), B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);

    // subresultant polynomial remainder sequence
    Int g(1), h(1);
    while (true) {
        int delta = A.degree() - B.degree();
        ZPoly R = pseudo_rem(A, B);
        if (R.is_zero()) break;
        if (R.degree() == 0) {
            B = ZPoly{1};
            break;
        }
        A = B;
        Int div = g * int_pow(h, static_cast<unsigned long>(delta));
        std::vector<Int> coeffs(R.coeffs());
        for (auto& v : coeffs) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
        B = ZPoly(std::move(coeffs));
        g = A.leading();
        if (delta == 0) {
            // h unchanged when delta = 0? h = h^(1-delta) g^delta = h
        } else {
            // h = g^delta / h^(delta-1)
            Int num = int_pow(g, static_cast<unsigned long>(delta));
            Int den = int_pow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    ZPoly G = B.primitive_part() * cg;
    if (sign(G.leading()) < 0) G = -G;
    return G;
}

ZPoly squarefree_part(const ZPoly& p) {
    if (p.degree() <= 1) {
        ZPoly r = p.primitive_part();
        if (!r.is_zero() && sign(r.leading()) < 0) r = -r;
        return r;
    }
    ZPoly g = poly_gcd(p, p.derivative());
    ZPoly r = divexact(p.primitive_part(), g.primitive_part());
    r = r.primitive_part();
    if (sign(r.leading()) < 0) r = -r;
    return r;
}

void RatFunc::normalize(ZPoly num, ZPoly den) {
    if (den.is_zero()) throw DomainError("DivisionByZero", "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = ZPoly();
        den_ = ZPoly{1};
        return;
    }
    ZPoly g = poly_gcd(num, den);
    if (g.degree() > 0 || g.content() > 1) {
        num = divexact(num, g);
        den = divexact(den, g);
    }
    Int cn = num.content(), cd = den.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cg > 1) {
        std::vector<Int> nc(num.coeffs()), dc(den.coeffs());
        for (auto& v : nc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), cg.get_mpz_t());
        for (auto& v : dc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), cg.get_mpz_t());
        num = ZPoly(std::move(nc));
        den = ZPoly(std::move(dc));
    }
    if (sign(den.leading()) < 0) {
        num = -num;
        den = -den;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (sign(d) == 0) throw DomainError("Pole", "denominator vanishes at " + rat_to_string(x));
    return Rat(num_.eval(x) / d);
}

int RatFunc::sign_at(const Rat& x) const {
    int sd = den_.sign_at(x);
    if (sd == 0) throw DomainError("Pole", "denominator vanishes at " + rat_to_string(x));
    return num_.sign_at(x) * sd;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

ZPoly RatFunc::derivative_num() const { return num_.derivative() * den_ - num_ * den_.derivative(); }

RatFunc RatFunc::compose_one_minus_x() const {
    return RatFunc(num_.compose_one_minus_x(), den_.compose_one_minus_x());
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_ == ZPoly{1}) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (sign(c[i]) == 0) continue;
        if (!first) os << (sign(c[i]) > 0 ? " + " : " - ");
        else if (sign(c[i]) < 0) os << "-";
        Rat a = rat_abs(c[i]);
        if (a != 1 || i == 0) os << rat_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace penney
