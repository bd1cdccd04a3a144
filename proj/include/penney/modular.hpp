#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "penney/poly.hpp"

namespace penney::modular {

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p);
uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p);
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p);
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p);
uint64_t inv_mod(uint64_t a, uint64_t p);

bool is_prime(uint64_t n);

/// `count` distinct primes descending from just below 2^62.
std::vector<uint64_t> prime_list(size_t count);

/// a/b mod p; nullopt when b == 0 mod p.
std::optional<uint64_t> rat_mod(const Rat& q, uint64_t p);
uint64_t int_mod(const Int& z, uint64_t p);

/// Rational function through the given points mod p: deg num <= dn,
/// deg den <= dd, den monic, all points interpolated. Fails (nullopt)
/// when no such function exists mod p (degree bounds too small
/// or an unlucky prime).
struct FpRatFunc {
    std::vector<uint64_t> num, den;  // ascending, den monic
};
std::optional<FpRatFunc> cauchy_interpolate(const std::vector<uint64_t>& xs,
                                            const std::vector<uint64_t>& ys, int dn, int dd,
                                            uint64_t p);

/// Wang rational reconstruction: a/b = c (mod m) with |a|, b <= sqrt(m/2).
std::optional<Rat> rational_reconstruct(const Int& c, const Int& m);

/// Multi-prime driver. `eval` returns f(x) mod p for a sample point given as
/// a reduced rational, or nullopt if the evaluation degenerates mod p.
/// Returns the unique rational function of degree <= (dn, dd) through all
/// sample points, as a reduced integer-coefficient RatFunc; nullopt when the
/// degree bounds do not fit.
std::optional<RatFunc> reconstruct_ratfunc(
    const std::function<std::optional<uint64_t>(const Rat&, uint64_t)>& eval,
    const std::vector<Rat>& xs, int dn, int dd);

}  // namespace penney::modular
