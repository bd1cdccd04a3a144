#include "penney/rational.hpp"

#include <cctype>

namespace penney {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw DomainError("BadNumber", "empty rational literal");
    for (char ch : text) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+' ||
              ch == '.'))
            throw DomainError("BadNumber", "malformed rational '" + text + "'");
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        // decimal literal: digits.digits, exact value
        if (text.find('/') != std::string::npos || text.find('.', dot + 1) != std::string::npos)
            throw DomainError("BadNumber", "malformed rational '" + text + "'");
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw DomainError("BadNumber", "malformed rational '" + text + "'");
        Int num;
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
            throw DomainError("BadNumber", "malformed rational '" + text + "'");
        return make_rat(num, int_pow(Int(10), frac_len));
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw DomainError("BadNumber", "malformed rational '" + text + "'");
    if (sign(Int(q.get_den())) == 0)
        throw DomainError("BadNumber", "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

std::string rat_to_decimal(const Rat& q, int digits) {
    if (digits < 0) digits = 0;
    Int scale = int_pow(Int(10), static_cast<unsigned long>(digits));
    // round(|q| * scale), half away from zero
    Int n = rat_num(q), d = rat_den(q);
    bool neg = sign(n) < 0;
    if (neg) n = -n;
    Int num = n * scale * 2 + d;  // 2*n*scale + d, then / (2d) truncated = rounded
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), Int(d * 2).get_mpz_t());
    std::string dig = r.get_str();
    std::string out;
    if (digits == 0) {
        out = dig;
    } else {
        if (static_cast<int>(dig.size()) <= digits) dig.insert(0, digits + 1 - dig.size(), '0');
        out = dig.substr(0, dig.size() - digits) + "." + dig.substr(dig.size() - digits);
    }
    if (neg && r != 0) out.insert(0, 1, '-');
    return out;
}

std::string rat_to_decimal_sig(const Rat& q, int sig) {
    if (sign(q) == 0) return "0";
    // magnitude = floor(log10(|q|))
    Rat a = rat_abs(q);
    int mag = 0;
    if (a >= 1) {
        Int ip = rat_num(a) / rat_den(a);
        mag = static_cast<int>(mpz_sizeinbase(ip.get_mpz_t(), 10)) - 1;
    } else {
        Rat t = a;
        while (t < 1) {
            t *= 10;
            --mag;
        }
    }
    int after = sig - 1 - mag;
    if (after < 0) after = 0;
    std::string s = rat_to_decimal(q, after);
    return s;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace penney
