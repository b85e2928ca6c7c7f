#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gop {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// falling factorial m (m-1) ... (m-k+1)
inline Rat falling(const Rat& m, unsigned long k) {
    Rat r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= m - Rat(static_cast<long>(i));
    return r;
}

/// house of a rational: its absolute value
inline Rat house(const Rat& x) { return abs(x); }

/// least d >= 1 with d*x integral for every x in xs (lcm of reduced denominators)
inline Int den_of_rationals(std::span<const Rat> xs) {
    Int d = 1;
    for (const Rat& x : xs) d = int_lcm(d, x.get_den());
    return d;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& x) { return x.get_str(); }

/// natural log of a positive big integer, as a double
inline double log_int(const Int& n) {
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

inline double log_factorial(unsigned long n) {
    return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace gop
