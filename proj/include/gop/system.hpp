#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gop/matrix.hpp"
#include "gop/poly.hpp"

namespace gop {

/// First-order system y' = G y with its denominator data:
/// T monic common denominator, clearing integer making clearing*T*G integral,
/// t = max(deg T, deg TG).
struct System {
    MatRF G;
    Poly T;
    Int clearing = 1;
    long t = 0;

    explicit System(MatRF g) : G(std::move(g)) {
        T = common_denominator_matrix(G);
        t = T.degree();
        for (std::size_t i = 0; i < G.dim(); ++i)
            for (std::size_t j = 0; j < G.dim(); ++j) {
                RatFunc e = RatFunc(T) * G(i, j);
                if (!e.is_polynomial())
                    throw std::logic_error("common denominator does not clear entry");
                clearing = int_lcm(clearing, e.num().coeff_den());
                t = std::max(t, static_cast<long>(e.num().degree()));
            }
    }

    std::size_t dim() const { return G.dim(); }
};

/// Cache of iterated matrices G_1..G_S with G_{s+1} = G_s G + G_s'.
struct IteratedMatrices {
    System base;
    std::vector<MatRF> cache;  // cache[s-1] = G_s

    const MatRF& at(std::size_t s) const {
        if (s < 1 || s > cache.size()) throw std::out_of_range("iterated matrix index");
        return cache[s - 1];
    }
};

/// T^s * M entrywise; throws if an entry fails to clear to a polynomial
inline Matrix<Poly> clear_power(const MatRF& m, const Poly& T, std::size_t s) {
    Poly ts = T.pow(s);
    Matrix<Poly> r(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            RatFunc e = RatFunc(ts) * m(i, j);
            if (!e.is_polynomial())
                throw std::logic_error("T^s G_s is not polynomial: arithmetic bug");
            r(i, j) = e.num();
        }
    return r;
}

inline IteratedMatrices iterate(const System& sys, std::size_t S) {
    if (S < 1) throw std::invalid_argument("iterate needs S >= 1");
    IteratedMatrices it{sys, {}};
    it.cache.reserve(S);
    it.cache.push_back(sys.G);
    for (std::size_t s = 2; s <= S; ++s)
        it.cache.push_back(it.cache.back() * sys.G + it.cache.back().derivative());
    for (std::size_t s = 1; s <= S; ++s) clear_power(it.at(s), sys.T, s);  // asserts
    return it;
}

/// Exact Galochkin denominators plus floating growth diagnostics.
struct GalochkinReport {
    std::size_t S = 0;
    std::vector<Int> qs;                // q_1..q_S, nondecreasing
    std::vector<double> eps_estimates;  // log q_s / log s!, s >= 2
    std::vector<double> geom_estimates; // q_s^{1/(s+1)}
};

/// q_s with a caller-supplied clearing polynomial (used for gauge tests)
inline GalochkinReport galochkin_qs_with(const std::vector<MatRF>& gs, const Poly& T) {
    GalochkinReport rep;
    rep.S = gs.size();
    Int q = 1;
    for (std::size_t s = 1; s <= gs.size(); ++s) {
        Matrix<Poly> e = clear_power(gs[s - 1], T, s);
        Rat fac(factorial(s));
        for (std::size_t i = 0; i < e.dim(); ++i)
            for (std::size_t j = 0; j < e.dim(); ++j)
                for (const Rat& c : e(i, j).coeffs()) {
                    Rat x = c / fac;
                    q = int_lcm(q, x.get_den());
                }
        rep.qs.push_back(q);
        rep.geom_estimates.push_back(std::exp(log_int(q) / static_cast<double>(s + 1)));
        if (s >= 2) rep.eps_estimates.push_back(log_int(q) / log_factorial(s));
    }
    return rep;
}

inline GalochkinReport galochkin_qs(const IteratedMatrices& it) {
    if (it.cache.empty()) throw std::invalid_argument("empty iterated-matrix cache");
    return galochkin_qs_with(it.cache, it.base.T);
}

enum class GrowthFlag { consistent_with_strict, consistent_with_large, inconsistent };

struct GrowthSummary {
    GrowthFlag flag;
    double geom_sup;      // sup of q_s^{1/(s+1)}
    double geom_slope;    // least-squares slope of log q_s vs s+1, last half
    double fact_slope;    // least-squares slope of log q_s vs log s!, last half
    double geom_residual;
    double fact_residual;
    double eps_last;
};

namespace detail {

struct Fit {
    double slope, residual;
};

inline Fit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = n * sxx - sx * sx;
    double slope = (denom == 0) ? 0.0 : (n * sxy - sx * sy) / denom;
    double icept = (sy - slope * sx) / n;
    double res = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double e = y[i] - slope * x[i] - icept;
        res += e * e;
    }
    return {slope, res};
}

}  // namespace detail

/// Empirical growth classification; never claims a proof. The strict flag
/// requires the geometric estimates q_s^{1/(s+1)} to flatten out over the
/// last half of the range (per-step drift below 5% of their mean there);
/// failing that, a small and nonincreasing eps estimate flags the large
/// class. Log-model fits are reported for inspection.
inline GrowthSummary classify_growth(const GalochkinReport& rep) {
    if (rep.S < 8) throw std::invalid_argument("classify_growth needs S >= 8");
    GrowthSummary g{};
    std::vector<double> xs_geo, xs_fac, ys, xs, ge;
    std::size_t lo = rep.S / 2;
    double mean = 0;
    for (std::size_t s = lo; s <= rep.S; ++s) {
        xs_geo.push_back(static_cast<double>(s + 1));
        xs_fac.push_back(log_factorial(s));
        ys.push_back(log_int(rep.qs[s - 1]));
        xs.push_back(static_cast<double>(s));
        ge.push_back(rep.geom_estimates[s - 1]);
        mean += rep.geom_estimates[s - 1];
    }
    mean /= static_cast<double>(ge.size());
    auto fit_geo = detail::least_squares(xs_geo, ys);
    auto fit_fac = detail::least_squares(xs_fac, ys);
    auto drift = detail::least_squares(xs, ge);
    g.geom_slope = fit_geo.slope;
    g.fact_slope = fit_fac.slope;
    g.geom_residual = fit_geo.residual;
    g.fact_residual = fit_fac.residual;
    g.geom_sup = 0;
    for (double v : rep.geom_estimates) g.geom_sup = std::max(g.geom_sup, v);
    g.eps_last = rep.eps_estimates.empty() ? 0.0 : rep.eps_estimates.back();
    if (std::abs(drift.slope) <= 0.05 * mean + 1e-9) {
        g.flag = GrowthFlag::consistent_with_strict;
    } else if (!rep.eps_estimates.empty() &&
               g.eps_last < 0.5 &&
               g.eps_last <= rep.eps_estimates[rep.eps_estimates.size() / 2] + 1e-9) {
        g.flag = GrowthFlag::consistent_with_large;
    } else {
        g.flag = GrowthFlag::inconsistent;
    }
    return g;
}

inline std::string growth_flag_name(GrowthFlag f) {
    switch (f) {
        case GrowthFlag::consistent_with_strict: return "consistent-with-strict";
        case GrowthFlag::consistent_with_large: return "consistent-with-large";
        case GrowthFlag::inconsistent: return "inconsistent";
    }
    return "?";
}

/// P[A] = P A P^{-1} + P' P^{-1}
inline MatRF gauge_transform(const MatRF& P, const MatRF& A) {
    if (P.det().is_zero()) throw std::domain_error("singular gauge matrix");
    MatRF pinv = P.inverse();
    return P * A * pinv + P.derivative() * pinv;
}

/// system with entries composed with u -> u + alpha
inline System translate(const System& sys, const Rat& alpha) {
    MatRF g(sys.dim());
    for (std::size_t i = 0; i < sys.dim(); ++i)
        for (std::size_t j = 0; j < sys.dim(); ++j) g(i, j) = sys.G(i, j).shift(alpha);
    return System(std::move(g));
}

/// system at infinity: G~(u) = -u^{-2} G(1/u)
inline System invert_variable(const System& sys) {
    RatFunc mu2(Poly(Rat(-1)), Poly::monomial(2));
    MatRF g(sys.dim());
    for (std::size_t i = 0; i < sys.dim(); ++i)
        for (std::size_t j = 0; j < sys.dim(); ++j)
            g(i, j) = mu2 * sys.G(i, j).invert_variable();
    return System(std::move(g));
}

/// Triangular-change coefficients c_{s,l} = binom(s-1, s-l) s!/l!, cross-checked
/// against their recurrence.
struct CCoeffTable {
    std::size_t s_max;
    std::vector<std::vector<Int>> c;  // c[s][l], 1 <= l <= s <= s_max

    const Int& at(std::size_t s, std::size_t l) const { return c[s][l]; }
};

inline CCoeffTable c_coeffs(std::size_t s_max) {
    if (s_max < 1) throw std::invalid_argument("c_coeffs needs s_max >= 1");
    CCoeffTable tab{s_max, {}};
    tab.c.assign(s_max + 1, {});
    for (std::size_t s = 1; s <= s_max; ++s) {
        tab.c[s].assign(s + 1, Int(0));
        for (std::size_t l = 1; l <= s; ++l)
            tab.c[s][l] = binomial(s - 1, s - l) * (factorial(s) / factorial(l));
    }
    // recurrence cross-check: c_{s+1,1} = (s+1) c_{s,1}; c_{s+1,k} = c_{s,k-1} + (s+k) c_{s,k};
    // c_{s+1,s+1} = c_{s,s}
    if (tab.c[1][1] != 1) throw std::logic_error("c_{1,1} != 1");
    for (std::size_t s = 1; s + 1 <= s_max; ++s) {
        if (tab.c[s + 1][1] != Int(s + 1) * tab.c[s][1])
            throw std::logic_error("c-coefficient recurrence violated at k=1");
        for (std::size_t k = 2; k <= s; ++k)
            if (tab.c[s + 1][k] != tab.c[s][k - 1] + Int(s + k) * tab.c[s][k])
                throw std::logic_error("c-coefficient recurrence violated");
        if (tab.c[s + 1][s + 1] != tab.c[s][s])
            throw std::logic_error("c-coefficient recurrence violated at k=s+1");
    }
    return tab;
}

}  // namespace gop
