#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "penney/rational.hpp"

namespace penney {

/// Dense univariate polynomial over Z, coefficients ascending by degree.
/// The zero polynomial has an empty coefficient vector and degree -1.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    ZPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static ZPoly constant(Int v) {
        ZPoly p;
        p.c_.push_back(std::move(v));
        p.trim();
        return p;
    }
    static ZPoly monomial(Int coeff, int deg) {
        ZPoly p;
        p.c_.assign(deg + 1, Int(0));
        p.c_[deg] = std::move(coeff);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& operator[](int i) const { return c_[i]; }
    const Int& leading() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator*(const Int& k) const;
    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

    ZPoly derivative() const;

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const;
    /// this / content, sign of leading coefficient preserved.
    ZPoly primitive_part() const;

    Int eval_int(const Int& x) const;
    Rat eval(const Rat& x) const;
    /// Exact sign of p(a/b) without building the rational value.
    int sign_at(const Rat& x) const;

    /// p(1-x); used for the complement symmetry p -> 1-p.
    ZPoly compose_one_minus_x() const;

    std::string to_string(const std::string& var = "p") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

/// Pseudo-remainder R with lc(b)^(deg a - deg b + 1) * a = q*b + R.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);

/// Quotient of an exact division a = q*b over Z. Throws on inexact.
ZPoly divexact(const ZPoly& a, const ZPoly& b);

/// Subresultant gcd, returned primitive with positive leading coefficient;
/// includes the gcd of the two contents.
ZPoly poly_gcd(const ZPoly& a, const ZPoly& b);

/// p / gcd(p, p'): same real roots, all simple.
ZPoly squarefree_part(const ZPoly& p);

/// Reduced rational function over Z[p]: coprime parts, coprime contents,
/// positive leading denominator coefficient. Unique normal form, so
/// operator== is functional equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(ZPoly{1}) {}
    RatFunc(ZPoly num, ZPoly den) { normalize(std::move(num), std::move(den)); }

    static RatFunc from_rat(const Rat& q) {
        return RatFunc(ZPoly::constant(rat_num(q)), ZPoly::constant(rat_den(q)));
    }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rat eval(const Rat& x) const;
    /// Exact sign at x; throws DomainError("Pole") when den(x) = 0.
    int sign_at(const Rat& x) const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Numerator of the derivative: num' * den - num * den'.
    ZPoly derivative_num() const;

    /// f(1-p).
    RatFunc compose_one_minus_x() const;

    std::string to_string(const std::string& var = "p") const;

private:
    void normalize(ZPoly num, ZPoly den);
    ZPoly num_, den_;
};

/// Dense polynomial over Q (used for pgf numerator/denominator in x).
struct QPoly {
    std::vector<Rat> c;  // ascending

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && sign(c.back()) == 0) c.pop_back();
    }
    Rat eval(const Rat& x) const;
    std::string to_string(const std::string& var = "x") const;
};

}  // namespace penney
