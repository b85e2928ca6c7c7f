#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gop/matrix.hpp"
#include "gop/ratfunc.hpp"
#include "gop/series.hpp"
#include "gop/weyl.hpp"

namespace gop {

/// L = z^n y^(n) - z^{n-1} B_{n-1} y^{(n-1)} - ... - B_0 y
struct ZeroNormalForm {
    std::size_t n = 0;
    std::vector<RatFunc> B;  // B_0 .. B_{n-1}
};

/// Linear differential operator sum a_k(z) D^k with rational-function coefficients.
class DiffOp {
  public:
    explicit DiffOp(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) {
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
        if (c_.empty() || c_.back().is_zero())
            throw std::invalid_argument("zero differential operator");
    }

    std::size_t order() const { return c_.size() - 1; }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    const RatFunc& coeff(std::size_t k) const { return c_[k]; }

    /// monic lcm of the coefficient denominators
    Poly coeff_common_den() const {
        Poly t = Poly::one();
        for (const RatFunc& a : c_) t = Poly::lcm(t, a.den());
        return t;
    }

    /// coefficients after clearing denominators (polynomials, same solution space)
    std::vector<Poly> cleared_coeffs() const {
        Poly t = coeff_common_den();
        std::vector<Poly> r;
        r.reserve(c_.size());
        for (const RatFunc& a : c_) {
            RatFunc p = a * RatFunc(t);
            if (!p.is_polynomial()) throw std::logic_error("clearing failed");
            r.push_back(p.num());
        }
        return r;
    }

    /// operator with coefficients composed with z -> z + alpha
    DiffOp shift(const Rat& alpha) const {
        std::vector<RatFunc> r;
        r.reserve(c_.size());
        for (const RatFunc& a : c_) r.push_back(a.shift(alpha));
        return DiffOp(std::move(r));
    }

    bool operator==(const DiffOp& o) const { return c_ == o.c_; }

  private:
    std::vector<RatFunc> c_;
};

/// Companion matrix of L after monic normalization: superdiagonal of 1s,
/// last row -a_n, ..., -a_1.
inline MatRF companion(const DiffOp& L) {
    std::size_t n = L.order();
    if (n < 1) throw std::invalid_argument("companion of order-0 operator");
    MatRF m(n);
    const RatFunc& lead = L.coeff(n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = RatFunc::one();
    for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = -(L.coeff(j) / lead);
    return m;
}

/// Rewrite monic L as z^n y^(n) - sum z^k B_k y^(k): B_{n-k} = -z^k a_k
/// with a_k the monic coefficient of y^{(n-k)}.
inline ZeroNormalForm to_zero_normal_form(const DiffOp& L) {
    std::size_t n = L.order();
    if (n < 1) throw std::invalid_argument("normal form of order-0 operator");
    ZeroNormalForm nf;
    nf.n = n;
    nf.B.resize(n);
    const RatFunc& lead = L.coeff(n);
    for (std::size_t k = 0; k < n; ++k) {
        // coefficient of y^{(k)} is a_{n-k}; B_k = -z^{n-k} a_{n-k}
        RatFunc a = L.coeff(k) / lead;
        nf.B[k] = -(RatFunc(Poly::monomial(n - k)) * a);
    }
    return nf;
}

/// Truncated series of L(f). The operator is first cleared to polynomial
/// coefficients (multiplication by the monic common denominator), which
/// preserves vanishing; when the common denominator is 1 the result is L(f)
/// itself. Truncation length drops by the order.
inline Series apply(const DiffOp& L, const Series& f) {
    std::size_t n = L.order();
    if (f.truncation() < n) throw std::invalid_argument("apply: series too short");
    std::vector<Poly> p = L.cleared_coeffs();
    std::size_t K = f.truncation() - n;
    Series acc = Series::zeros(K);
    Series der = f;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!p[k].is_zero()) acc = acc + der.truncate(K).mul_poly(p[k]);
        if (k + 1 < p.size()) der = der.derivative();
    }
    return acc;
}

/// lower a Weyl element to a DiffOp with polynomial coefficients
inline DiffOp diffop_from_weyl(const WeylPoly& w) {
    if (w.is_zero()) throw std::invalid_argument("zero Weyl element");
    unsigned long order = 0;
    for (const auto& [k, c] : w.terms()) order = std::max(order, k.second);
    std::vector<std::vector<Rat>> polys(order + 1);
    for (const auto& [k, c] : w.terms()) {
        auto [i, j] = k;
        if (polys[j].size() <= i) polys[j].resize(i + 1, Rat(0));
        polys[j][i] = c;
    }
    std::vector<RatFunc> coeffs;
    coeffs.reserve(order + 1);
    for (auto& v : polys) coeffs.emplace_back(Poly(std::move(v)));
    return DiffOp(std::move(coeffs));
}

/// embed a DiffOp into the Weyl algebra, clearing denominators first
inline WeylPoly weyl_from_diffop(const DiffOp& L) {
    std::vector<Poly> p = L.cleared_coeffs();
    WeylPoly w;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (int i = 0; i <= p[j].degree(); ++i)
            w.add_term(static_cast<unsigned long>(i), j, p[j].coeff(static_cast<std::size_t>(i)));
    return w;
}

/// operator in u = 1/z annihilating g(u) = f(1/u) whenever L f = 0,
/// via d/dz = -u^2 d/du
inline DiffOp invert_variable(const DiffOp& L) {
    std::size_t n = L.order();
    // M_k = (-u^2 D)^k as coefficient lists in D-powers
    std::vector<std::vector<RatFunc>> M(n + 1);
    M[0] = {RatFunc::one()};
    RatFunc mu2(-Poly::monomial(2));
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<RatFunc> next(k + 1, RatFunc::zero());
        for (std::size_t j = 0; j < M[k - 1].size(); ++j) {
            next[j] += mu2 * M[k - 1][j].derivative();
            next[j + 1] += mu2 * M[k - 1][j];
        }
        M[k] = std::move(next);
    }
    std::vector<RatFunc> out(n + 1, RatFunc::zero());
    for (std::size_t k = 0; k <= n; ++k) {
        RatFunc a = L.coeff(k).invert_variable();
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < M[k].size(); ++j) out[j] += a * M[k][j];
    }
    return DiffOp(std::move(out));
}

inline std::string diffop_to_string(const DiffOp& L, const std::string& var = "z") {
    std::string s;
    for (std::size_t k = L.order() + 1; k-- > 0;) {
        if (L.coeff(k).is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + ratfunc_to_string(L.coeff(k), var) + ")";
        if (k > 0) {
            s += "*D";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace gop
