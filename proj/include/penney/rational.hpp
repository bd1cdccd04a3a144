#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace penney {

using Int = mpz_class;
using Rat = mpq_class;

/// Domain-level failure (bad input, pole, unsatisfiable request).
/// Carries a stable short name used by the C API and the CLI exit code 2.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

inline int sign(const Int& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

/// n/d in lowest terms with positive denominator. d must be nonzero.
inline Rat make_rat(const Int& n, const Int& d) {
    if (sign(d) == 0) throw DomainError("DivisionByZero", "rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long n, long d) { return make_rat(Int(n), Int(d)); }

/// Parses "a/b" or "a". Throws DomainError on malformed input.
Rat rat_from_string(const std::string& text);

/// "a/b", or just "a" when the denominator is 1.
std::string rat_to_string(const Rat& q);

/// Fixed-point decimal expansion with `digits` places after the point,
/// rounded half away from zero.
std::string rat_to_decimal(const Rat& q, int digits);

/// Decimal with `sig` significant digits (used for human CLI output).
std::string rat_to_decimal_sig(const Rat& q, int sig);

/// 10^-k as an exact rational.
inline Rat pow10_neg(int k) {
    Int d(1);
    mpz_ui_pow_ui(d.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return make_rat(Int(1), d);
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Int rat_num(const Rat& q) { return Int(q.get_num()); }
inline Int rat_den(const Rat& q) { return Int(q.get_den()); }

Int int_pow(const Int& base, unsigned long e);

}  // namespace penney
