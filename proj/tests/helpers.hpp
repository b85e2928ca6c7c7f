#pragma once

#include <random>
#include <vector>

#include "gop/gop.hpp"

namespace gop::testing {

inline Rat random_rat(std::mt19937& rng, long height = 10) {
    std::uniform_int_distribution<long> num(-height, height);
    std::uniform_int_distribution<long> den(1, height);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Poly random_poly(std::mt19937& rng, int max_deg, long height = 10) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<Rat> c;
    c.reserve(d + 1);
    for (int i = 0; i <= d; ++i) c.push_back(random_rat(rng, height));
    return Poly(std::move(c));
}

inline Poly random_nonzero_poly(std::mt19937& rng, int max_deg, long height = 10) {
    for (;;) {
        Poly p = random_poly(rng, max_deg, height);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc random_ratfunc(std::mt19937& rng, int max_deg, long height = 10) {
    return RatFunc(random_poly(rng, max_deg, height), random_nonzero_poly(rng, max_deg, height));
}

inline MatRF random_system_matrix(std::mt19937& rng, std::size_t n, int max_deg,
                                  long height = 10) {
    MatRF m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_ratfunc(rng, max_deg, height);
    return m;
}

/// y' = G y for y = (log(1/(1-z)), 1/(1-z))
inline System log_system() {
    MatRF g(2);
    g(0, 1) = RatFunc::one();
    g(1, 1) = RatFunc(Poly::one(), Poly(std::vector<Rat>{Rat(1), Rat(-1)}));
    return System(std::move(g));
}

/// 1x1 system of exp: y' = y
inline System exp_system() {
    MatRF g(1);
    g(0, 0) = RatFunc::one();
    return System(std::move(g));
}

/// closed form for the log system: G_s = [[0, (s-1)!/(1-z)^{s-1}], [0, s!/(1-z)^s]]
inline MatRF log_system_gs(std::size_t s) {
    MatRF m(2);
    Poly omz(std::vector<Rat>{Rat(1), Rat(-1)});
    m(0, 1) = RatFunc(Poly(Rat(factorial(s - 1))), omz.pow(s - 1));
    m(1, 1) = RatFunc(Poly(Rat(factorial(s))), omz.pow(s));
    return m;
}

inline Poly random_int_poly(std::mt19937& rng, int max_deg, long height = 5) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-height, height);
    int d = deg(rng);
    std::vector<Rat> c;
    c.reserve(d + 1);
    for (int i = 0; i <= d; ++i) c.push_back(Rat(coef(rng)));
    return Poly(std::move(c));
}

/// product of elementary matrices with integer-polynomial entries: unimodular
/// gauge (det = 1), so P and P^{-1} are both integer-polynomial matrices
inline MatRF random_unimodular_gauge(std::mt19937& rng, std::size_t n, int steps = 3) {
    MatRF p = MatRF::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    for (int k = 0; k < steps; ++k) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        MatRF e = MatRF::identity(n);
        e(i, j) = RatFunc(random_int_poly(rng, 1, 3));
        p = p * e;
    }
    return p;
}

}  // namespace gop::testing
