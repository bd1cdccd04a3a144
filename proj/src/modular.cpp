#include "penney/modular.hpp"

#include <algorithm>
#include <mutex>

namespace penney::modular {

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) { return pow_mod(a, p - 2, p); }

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic Miller-Rabin base set for 64-bit integers
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<uint64_t> prime_list(size_t count) {
    static std::mutex mtx;
    static std::vector<uint64_t> cache;
    std::lock_guard<std::mutex> lock(mtx);
    uint64_t n = cache.empty() ? ((1ull << 62) - 1) : cache.back() - 2;
    while (cache.size() < count) {
        if (is_prime(n)) cache.push_back(n);
        n -= 2;
    }
    return {cache.begin(), cache.begin() + static_cast<long>(count)};
}

uint64_t int_mod(const Int& z, uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

std::optional<uint64_t> rat_mod(const Rat& q, uint64_t p) {
    uint64_t d = int_mod(rat_den(q), p);
    if (d == 0) return std::nullopt;
    return mul_mod(int_mod(rat_num(q), p), inv_mod(d, p), p);
}

namespace {

using FpVec = std::vector<uint64_t>;

void trim(FpVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

uint64_t eval_fp(const FpVec& f, uint64_t x, uint64_t p) {
    uint64_t acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p), f[i], p);
    return acc;
}

void divmod_fp(const FpVec& a, const FpVec& b, FpVec& q, FpVec& r, uint64_t p) {
    r = a;
    trim(r);
    q.clear();
    if (b.empty()) throw std::logic_error("divmod_fp: zero divisor");
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, 0);
    uint64_t inv_lb = inv_mod(b.back(), p);
    for (size_t k = r.size(); k >= b.size(); --k) {
        size_t top = k - 1;
        if (r[top] == 0) continue;
        uint64_t c = mul_mod(r[top], inv_lb, p);
        size_t base = top - (b.size() - 1);
        q[base] = c;
        for (size_t i = 0; i < b.size(); ++i) r[base + i] = sub_mod(r[base + i], mul_mod(c, b[i], p), p);
    }
    trim(r);
    trim(q);
}

FpVec mul_fp(const FpVec& a, const FpVec& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

FpVec sub_fp(const FpVec& a, const FpVec& b, uint64_t p) {
    FpVec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = sub_mod(r[i], b[i], p);
    trim(r);
    return r;
}

uint64_t eval_zpoly_fp(const ZPoly& f, uint64_t x, uint64_t p) {
    uint64_t acc = 0;
    for (size_t i = f.coeffs().size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, p), int_mod(f[static_cast<int>(i)], p), p);
    return acc;
}

}  // namespace

std::optional<FpRatFunc> cauchy_interpolate(const std::vector<uint64_t>& xs,
                                            const std::vector<uint64_t>& ys, int dn, int dd,
                                            uint64_t p) {
    const size_t m = xs.size();
    if (m == 0) return std::nullopt;
    // Newton divided differences in place
    std::vector<uint64_t> ddc(ys);
    for (size_t level = 1; level < m; ++level) {
        for (size_t i = m - 1; i >= level; --i) {
            uint64_t dx = sub_mod(xs[i], xs[i - level], p);
            if (dx == 0) return std::nullopt;
            ddc[i] = mul_mod(sub_mod(ddc[i], ddc[i - 1], p), inv_mod(dx, p), p);
            if (i == level) break;
        }
    }
    FpVec F;
    for (size_t i = m; i-- > 0;) {
        // F = F*(x - x_i) + ddc[i]
        FpVec nxt(F.size() + 1, 0);
        for (size_t j = 0; j < F.size(); ++j) {
            nxt[j + 1] = add_mod(nxt[j + 1], F[j], p);
            nxt[j] = sub_mod(nxt[j], mul_mod(F[j], xs[i], p), p);
        }
        F = std::move(nxt);
        if (F.empty()) F.push_back(0);
        F[0] = add_mod(F[0], ddc[i], p);
        trim(F);
    }
    FpVec M{1};
    for (uint64_t x : xs) {
        FpVec nxt(M.size() + 1, 0);
        for (size_t j = 0; j < M.size(); ++j) {
            nxt[j + 1] = add_mod(nxt[j + 1], M[j], p);
            nxt[j] = sub_mod(nxt[j], mul_mod(M[j], x, p), p);
        }
        M = std::move(nxt);
    }
    // extended Euclid on (M, F) tracking v with r = u*M + v*F
    FpVec r0 = M, r1 = F, v0, v1{1};
    trim(r1);
    while (!r1.empty() && static_cast<int>(r1.size()) - 1 > dn) {
        FpVec q, r;
        divmod_fp(r0, r1, q, r, p);
        FpVec v = sub_fp(v0, mul_fp(q, v1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        v0 = std::move(v1);
        v1 = std::move(v);
    }
    FpVec N = std::move(r1), D = std::move(v1);
    trim(N);
    trim(D);
    if (D.empty()) return std::nullopt;
    if (static_cast<int>(D.size()) - 1 > dd) return std::nullopt;
    for (size_t i = 0; i < m; ++i) {
        uint64_t dv = eval_fp(D, xs[i], p);
        if (dv == 0) return std::nullopt;
        if (eval_fp(N, xs[i], p) != mul_mod(ys[i], dv, p)) return std::nullopt;
    }
    uint64_t ild = inv_mod(D.back(), p);
    for (auto& c : N) c = mul_mod(c, ild, p);
    for (auto& c : D) c = mul_mod(c, ild, p);
    return FpRatFunc{std::move(N), std::move(D)};
}

std::optional<Rat> rational_reconstruct(const Int& c, const Int& m) {
    Int r0 = m, r1 = c % m;
    if (r1 < 0) r1 += m;
    Int s0(0), s1(1);
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (s1 == 0) return std::nullopt;
    Int den = s1 < 0 ? Int(-s1) : s1;
    Int num = s1 < 0 ? Int(-r1) : r1;
    if (den > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;
    return make_rat(num, den);
}

std::optional<RatFunc> reconstruct_ratfunc(
    const std::function<std::optional<uint64_t>(const Rat&, uint64_t)>& eval,
    const std::vector<Rat>& xs, int dn, int dd) {
    constexpr size_t kMaxPrimes = 64;
    std::vector<Int> num_res, den_res;
    Int modulus(1);
    int ref_dn = -2, ref_dd = -2;
    size_t used = 0, cauchy_failures = 0;
    auto primes = prime_list(kMaxPrimes + 8);
    size_t next_prime = 0;

    while (used < kMaxPrimes && next_prime + 1 < primes.size()) {
        uint64_t p = primes[next_prime++];
        std::vector<uint64_t> xr, yr;
        xr.reserve(xs.size());
        bool ok = true;
        for (const Rat& x : xs) {
            auto xm = rat_mod(x, p);
            if (!xm) {
                ok = false;
                break;
            }
            xr.push_back(*xm);
        }
        if (!ok) continue;
        { // distinct sample points must stay distinct mod p
            auto sorted = xr;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        }
        yr.reserve(xs.size());
        for (const Rat& x : xs) {
            auto y = eval(x, p);
            if (!y) {
                ok = false;
                break;
            }
            yr.push_back(*y);
        }
        if (!ok) continue;
        auto fit = cauchy_interpolate(xr, yr, dn, dd, p);
        if (!fit) {
            if (++cauchy_failures >= 2) return std::nullopt;
            continue;
        }
        cauchy_failures = 0;
        int got_dn = static_cast<int>(fit->num.size()) - 1;
        int got_dd = static_cast<int>(fit->den.size()) - 1;
        if (ref_dn == -2 || got_dn > ref_dn || got_dd > ref_dd) {
            if (ref_dn != -2 && (got_dn < ref_dn || got_dd < ref_dd)) continue;  // mixed: unlucky
            ref_dn = got_dn;
            ref_dd = got_dd;
            num_res.assign(ref_dn + 1, Int(0));
            den_res.assign(ref_dd + 1, Int(0));
            modulus = 1;
            used = 0;
        } else if (got_dn < ref_dn || got_dd < ref_dd) {
            continue;  // unlucky prime dropped a leading coefficient
        }
        Int pz(static_cast<unsigned long>(p));
        auto lift = [&](std::vector<Int>& acc, const std::vector<uint64_t>& res) {
            for (size_t i = 0; i < acc.size(); ++i) {
                uint64_t ri = i < res.size() ? res[i] : 0;
                if (modulus == 1) {
                    acc[i] = Int(static_cast<unsigned long>(ri));
                } else {
                    uint64_t am = int_mod(acc[i], p);
                    uint64_t t = mul_mod(sub_mod(ri, am, p), inv_mod(int_mod(modulus, p), p), p);
                    acc[i] += modulus * Int(static_cast<unsigned long>(t));
                }
            }
        };
        lift(num_res, fit->num);
        lift(den_res, fit->den);
        modulus *= pz;
        ++used;
        if (used < 2) continue;

        std::vector<Rat> nq(num_res.size()), dq(den_res.size());
        bool landed = true;
        for (size_t i = 0; landed && i < num_res.size(); ++i) {
            auto r = rational_reconstruct(num_res[i], modulus);
            landed = r.has_value();
            if (landed) nq[i] = *r;
        }
        for (size_t i = 0; landed && i < den_res.size(); ++i) {
            auto r = rational_reconstruct(den_res[i], modulus);
            landed = r.has_value();
            if (landed) dq[i] = *r;
        }
        if (!landed) continue;

        Int lcm_n(1), lcm_d(1);
        for (const auto& q : nq) mpz_lcm(lcm_n.get_mpz_t(), lcm_n.get_mpz_t(), rat_den(q).get_mpz_t());
        for (const auto& q : dq) mpz_lcm(lcm_d.get_mpz_t(), lcm_d.get_mpz_t(), rat_den(q).get_mpz_t());
        std::vector<Int> nz(nq.size()), dz(dq.size());
        for (size_t i = 0; i < nq.size(); ++i) nz[i] = rat_num(nq[i]) * Int(lcm_n / rat_den(nq[i]));
        for (size_t i = 0; i < dq.size(); ++i) dz[i] = rat_num(dq[i]) * Int(lcm_d / rat_den(dq[i]));
        // value = (nz/lcm_n)/(dz/lcm_d) = (nz*lcm_d)/(dz*lcm_n)
        RatFunc cand(ZPoly(std::move(nz)) * lcm_d, ZPoly(std::move(dz)) * lcm_n);

        // verify against one more prime before accepting the lift
        uint64_t cp = primes[next_prime];
        bool verified = true;
        for (const Rat& x : xs) {
            auto xm = rat_mod(x, cp);
            auto y = eval(x, cp);
            if (!xm || !y) continue;
            uint64_t nv = eval_zpoly_fp(cand.num(), *xm, cp);
            uint64_t dv = eval_zpoly_fp(cand.den(), *xm, cp);
            if (dv == 0 || nv != mul_mod(*y, dv, cp)) {
                verified = false;
                break;
            }
        }
        if (verified) return cand;
    }
    return std::nullopt;
}

}  // namespace penney::modular
