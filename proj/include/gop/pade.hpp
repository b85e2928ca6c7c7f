#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gop/linalg.hpp"
#include "gop/matrix.hpp"
#include "gop/series.hpp"
#include "gop/system.hpp"

namespace gop {

/// Simultaneous (type II) approximation data: one common denominator Q with
/// deg Q <= N, numerators P_i = trunc(Q f_i) below z^{N+M}, and
/// Q f_i - P_i = O(z^{N+M}).
struct PadeSolution {
    Poly Q;
    std::vector<Poly> P;
    std::size_t N = 0;
    std::size_t M = 0;
    long contact = 0;      // min over i of ord(Q f_i - P_i); >= N+M on success
    bool integer_q = false;  // Q has integer coefficients after normalization
};

/// Solve for Q by exact linear algebra: unknowns q_0..q_N, one equation per
/// coefficient z^j, j in [N+1, N+M-1], per target series. The first nullspace
/// vector in the reduced-echelon convention is taken, then content-normalized.
inline PadeSolution solve_pade(const std::vector<Series>& f, std::size_t N, std::size_t M) {
    if (f.empty()) throw std::invalid_argument("solve_pade: no target series");
    if (M < 1) throw std::invalid_argument("solve_pade: M >= 1 required");
    for (const Series& s : f)
        if (s.truncation() < N + M) throw std::invalid_argument("solve_pade: series too short");
    std::size_t cols = N + 1;
    DenseQ mat;
    for (const Series& s : f)
        for (std::size_t j = N + 1; j + 1 <= N + M; ++j) {
            std::vector<Rat> row(cols, Rat(0));
            for (std::size_t k = 0; k <= N && k <= j; ++k) row[k] = s[j - k];
            mat.push_back(std::move(row));
        }
    auto basis = nullspace(mat, cols);
    if (basis.empty()) throw std::domain_error("solve_pade: only the zero denominator exists");
    PadeSolution sol;
    sol.N = N;
    sol.M = M;
    sol.Q = Poly(basis.front()).primitive();
    sol.integer_q = true;
    sol.contact = static_cast<long>(N + M);
    for (const Series& s : f) {
        Series qs = s.mul_poly(sol.Q);
        std::vector<Rat> pc(qs.coeffs().begin(),
                            qs.coeffs().begin() +
                                static_cast<long>(std::min(qs.coeffs().size(), N + 1)));
        sol.P.emplace_back(std::move(pc));
        Series rem = qs - series_from_poly(sol.P.back(), qs.truncation());
        long ord = static_cast<long>(rem.order());
        if (ord <= static_cast<long>(rem.truncation()))
            sol.contact = std::min(sol.contact, ord);
    }
    if (sol.contact < static_cast<long>(N + M))
        throw std::logic_error("solve_pade: contact verification failed");
    return sol;
}

using VecRF = std::vector<RatFunc>;

inline VecRF vec_derivative(const VecRF& v) {
    VecRF r;
    r.reserve(v.size());
    for (const RatFunc& a : v) r.push_back(a.derivative());
    return r;
}

inline VecRF operator-(const VecRF& a, const VecRF& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    VecRF r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
    return r;
}

/// Twisted powers P_h = (1/h!) (D - G)^h P for h = 0..H, by the recurrence
/// P_{h+1} = (P_h' - G P_h)/(h+1). Exact rational-function data.
inline std::vector<VecRF> twisted_powers(const MatRF& G, const VecRF& P, std::size_t H) {
    if (P.size() != G.dim()) throw std::invalid_argument("twisted_powers: size mismatch");
    std::vector<VecRF> out{P};
    for (std::size_t h = 1; h <= H; ++h) {
        VecRF next = vec_derivative(out.back()) - G.apply(out.back());
        for (RatFunc& a : next) a = a * Rat(Int(1), Int(h));
        out.push_back(std::move(next));
    }
    return out;
}

inline VecRF twisted_power(const MatRF& G, const std::vector<Poly>& P, std::size_t h) {
    return twisted_powers(G, VecRF(P.begin(), P.end()), h).back();
}

/// ord( T^m/m! (Q^(m) f - (D-G)^m P) ) >= N+M-m, checked on truncated series.
/// f must be a truncated solution column of y' = G y with Q f - P = O(z^{N+M}).
inline bool derivative_relation_check(const System& sys, const PadeSolution& sol,
                                      const std::vector<Series>& f, std::size_t m) {
    if (f.size() != sys.dim() || sol.P.size() != sys.dim())
        throw std::invalid_argument("derivative_relation_check: size mismatch");
    if (m >= sol.N + sol.M) throw std::invalid_argument("derivative_relation_check: m too large");
    auto tp = twisted_powers(sys.G, VecRF(sol.P.begin(), sol.P.end()), m);
    Poly qm = sol.Q;
    for (std::size_t k = 0; k < m; ++k) qm = qm.derivative();
    Rat invfact = Rat(1) / Rat(factorial(m));
    for (std::size_t i = 0; i < sys.dim(); ++i) {
        if (f[i].truncation() < m + sol.N + sol.M)
            throw std::invalid_argument("derivative_relation_check: series too short");
        // (D-G)^m P = m! P_m
        RatFunc rhs = tp[m][i] * Rat(factorial(m));
        Series lhs = f[i].mul_poly(qm);
        Series rhs_ser = series_from_ratfunc(rhs, lhs.truncation());
        Series diff = (lhs - rhs_ser) * invfact;
        Series full = diff.mul_poly(sys.T.pow(m));
        std::size_t need = sol.N + sol.M - m;
        for (std::size_t j = 0; j < need && j <= full.truncation(); ++j)
            if (full[j] != 0) return false;
    }
    return true;
}

/// Exact identity G_s/s! P = sum_j (-1)^j /((s-j)! j!) D^{s-j} (D-G)^j P,
/// with the left side from the iterated-matrix recurrence and the right side
/// from the twisted-power recurrence (independent code paths).
inline bool similileibniz_check(const IteratedMatrices& it, const std::vector<Poly>& P,
                                std::size_t s) {
    const System& sys = it.base;
    if (P.size() != sys.dim()) throw std::invalid_argument("similileibniz_check: size mismatch");
    VecRF pv(P.begin(), P.end());
    VecRF lhs = it.at(s).apply(pv);
    for (RatFunc& a : lhs) a = a * Rat(Int(1), factorial(s));
    auto tp = twisted_powers(sys.G, pv, s);
    VecRF rhs(sys.dim(), RatFunc::zero());
    for (std::size_t j = 0; j <= s; ++j) {
        // (D-G)^j P = j! P_j, then differentiate s-j times
        VecRF term = tp[j];
        for (RatFunc& a : term) a = a * Rat(factorial(j));
        for (std::size_t k = 0; k + j < s; ++k) term = vec_derivative(term);
        Rat c = Rat(1) / (Rat(factorial(s - j)) * Rat(factorial(j)));
        if (j % 2 == 1) c = -c;
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += term[i] * c;
    }
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!(lhs[i] == rhs[i])) return false;
    return true;
}

/// T^m P_m is polynomial of degree <= N + t m whenever (t+1) m <= M
inline bool degree_bound_check(const System& sys, const PadeSolution& sol, std::size_t m) {
    if ((sys.t + 1) * static_cast<long>(m) > static_cast<long>(sol.M))
        throw std::invalid_argument("degree_bound_check: m out of admissible range");
    VecRF pm = twisted_power(sys.G, sol.P, m);
    RatFunc tm{sys.T.pow(m)};
    for (const RatFunc& a : pm) {
        RatFunc e = tm * a;
        if (!e.is_polynomial()) return false;
        if (e.num().degree() > static_cast<int>(sol.N) + sys.t * static_cast<long>(m))
            return false;
    }
    return true;
}

/// Shifted determinant witnesses: column j (1-based) of R_(h) is
/// binom(h+j-1, j-1) P_{h+j-1}; invertibility of R_(0) is observed, not proved.
struct PadeWitness {
    std::vector<VecRF> Ph;              // P_0 .. P_{h_max + n - 1}
    std::vector<Matrix<RatFunc>> R;     // R_(0) .. R_(h_max)
    RatFunc detR0;
    bool nonsingular = false;
};

inline PadeWitness build_witness(const System& sys, const std::vector<Poly>& P,
                                 std::size_t h_max) {
    std::size_t n = sys.dim();
    if (P.size() != n) throw std::invalid_argument("build_witness: size mismatch");
    PadeWitness w;
    w.Ph = twisted_powers(sys.G, VecRF(P.begin(), P.end()), h_max + n - 1);
    for (std::size_t h = 0; h <= h_max; ++h) {
        Matrix<RatFunc> R(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rat b{binomial(h + j, j)};
            for (std::size_t i = 0; i < n; ++i) R(i, j) = w.Ph[h + j][i] * b;
        }
        w.R.push_back(std::move(R));
    }
    w.detR0 = w.R.front().det();
    w.nonsingular = !w.detR0.is_zero();
    return w;
}

}  // namespace gop
