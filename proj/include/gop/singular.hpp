#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gop/diffop.hpp"
#include "gop/poly.hpp"
#include "gop/series.hpp"

namespace gop {

enum class PointKind { ordinary, regular_singular, irregular, apparent };

inline std::string point_kind_name(PointKind k) {
    switch (k) {
        case PointKind::ordinary: return "ordinary";
        case PointKind::regular_singular: return "regular-singular";
        case PointKind::irregular: return "irregular";
        case PointKind::apparent: return "apparent";
    }
    return "?";
}

struct SingularityReport {
    std::optional<Rat> point;  // nullopt encodes infinity
    PointKind kind = PointKind::ordinary;
    std::optional<Rat> lambda;          // nullopt when every B_k vanishes (-inf)
    std::vector<Rat> exponents;         // rational indicial roots with multiplicity
    bool exponents_complete = true;     // false when irrational roots remain
    int holomorphic_solution_dim = -1;  // -1 when not computed (irregular)
    int verify_order_used = 0;
};

struct FuchsSummary {
    std::vector<SingularityReport> reports;
    bool is_fuchsian = true;      // over resolved points
    bool all_points_resolved = true;
};

/// lambda = max_k v(B_{n-k})/k with v the pole order at 0; zero entries
/// contribute -infinity (nullopt when all do)
inline std::optional<Rat> lambda_at_zero(const ZeroNormalForm& nf) {
    std::optional<Rat> lam;
    for (std::size_t k = 1; k <= nf.n; ++k) {
        const RatFunc& b = nf.B[nf.n - k];
        if (b.is_zero()) continue;
        Rat v = Rat(b.pole_order(Rat(0)), static_cast<long>(k));
        v.canonicalize();
        if (!lam || v > *lam) lam = v;
    }
    return lam;
}

namespace detail {

/// falling factorial m(m-1)...(m-k+1) as a polynomial in m
inline Poly falling_poly(std::size_t k) {
    Poly r = Poly::one();
    for (std::size_t i = 0; i < k; ++i)
        r *= Poly(std::vector<Rat>{Rat(-static_cast<long>(i)), Rat(1)});
    return r;
}

struct LocalData {
    Poly indicial;            // leading coefficient polynomial of the recurrence
    int dim = 0;              // dimension of the truncated power-series solution space
    std::vector<Series> basis;
};

/// Formal power-series solutions at 0 of the polynomial-coefficient operator
/// sum p_k y^(k), tracked to truncation V by forward substitution with
/// symbolic free parameters.
inline LocalData local_solutions(const std::vector<Poly>& p, std::size_t V) {
    int j0 = 0, jmax = 0;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k)
        for (int i = 0; i <= p[k].degree(); ++i) {
            if (p[k].coeff(i) == 0) continue;
            int j = i - static_cast<int>(k);
            if (first || j < j0) j0 = j;
            if (first || j > jmax) jmax = j;
            first = false;
        }
    if (first) throw std::invalid_argument("zero operator");
    // A_j(m) = sum_k p_{k, j+k} falling(m, k)
    std::vector<Poly> A(static_cast<std::size_t>(jmax - j0 + 1));
    for (std::size_t k = 0; k < p.size(); ++k)
        for (int i = 0; i <= p[k].degree(); ++i) {
            if (p[k].coeff(i) == 0) continue;
            int j = i - static_cast<int>(k);
            A[j - j0] += p[k].coeff(i) * falling_poly(k);
        }

    LocalData out;
    out.indicial = A[0];
    std::vector<std::vector<Rat>> c;  // c[m] over parameter columns
    std::vector<bool> active;
    std::size_t nparams = 0;
    for (std::size_t m = 0; m <= V; ++m) {
        std::vector<Rat> rest(nparams, Rat(0));
        for (int j = j0 + 1; j <= jmax; ++j) {
            long mp = static_cast<long>(m) - (j - j0);
            if (mp < 0) continue;
            Rat a = A[j - j0].eval(Rat(mp));
            if (a == 0) continue;
            const auto& row = c[static_cast<std::size_t>(mp)];
            for (std::size_t q = 0; q < row.size(); ++q) rest[q] += a * row[q];
        }
        Rat lead = out.indicial.eval(Rat(static_cast<long>(m)));
        if (lead != 0) {
            for (Rat& x : rest) x = -x / lead;
            c.push_back(std::move(rest));
        } else {
            // consistency relation rest = 0 among the free parameters
            std::size_t piv = nparams;
            for (std::size_t q = nparams; q-- > 0;)
                if (active[q] && rest[q] != 0) {
                    piv = q;
                    break;
                }
            if (piv != nparams) {
                // param_piv = -(sum of others)/rest[piv]; substitute everywhere
                std::vector<Rat> subst(nparams, Rat(0));
                for (std::size_t q = 0; q < nparams; ++q)
                    if (q != piv) subst[q] = -rest[q] / rest[piv];
                for (auto& row : c) {
                    if (row.size() <= piv || row[piv] == 0) continue;
                    Rat f = row[piv];
                    for (std::size_t q = 0; q < nparams; ++q)
                        if (q != piv && q < row.size()) row[q] += f * subst[q];
                    row[piv] = 0;
                }
                active[piv] = false;
            }
            // c_m becomes a fresh free parameter
            std::vector<Rat> row(nparams + 1, Rat(0));
            row.back() = 1;
            for (auto& r : c) r.resize(nparams + 1, Rat(0));
            active.push_back(true);
            ++nparams;
            c.push_back(std::move(row));
        }
    }
    std::vector<std::size_t> live;
    for (std::size_t q = 0; q < nparams; ++q)
        if (active[q]) live.push_back(q);
    out.dim = static_cast<int>(live.size());
    for (std::size_t q : live) {
        std::vector<Rat> s(V + 1, Rat(0));
        for (std::size_t m = 0; m <= V; ++m)
            if (q < c[m].size()) s[m] = c[m][q];
        out.basis.emplace_back(std::move(s));
    }
    return out;
}

inline std::vector<Poly> translated_cleared(const DiffOp& L, const Rat& alpha) {
    return L.shift(alpha).cleared_coeffs();
}

inline bool is_singular_at_zero(const DiffOp& L) {
    std::size_t n = L.order();
    const RatFunc& lead = L.coeff(n);
    for (std::size_t k = 0; k < n; ++k) {
        RatFunc b = L.coeff(k) / lead;
        if (!b.is_zero() && b.pole_order(Rat(0)) > 0) return true;
    }
    return false;
}

}  // namespace detail

/// rational roots of the indicial polynomial at alpha, with multiplicity;
/// rejects irregular points
inline std::pair<std::vector<Rat>, bool> indicial_roots(const DiffOp& L, const Rat& alpha) {
    DiffOp Lt = L.shift(alpha);
    if (detail::is_singular_at_zero(Lt)) {
        auto lam = lambda_at_zero(to_zero_normal_form(Lt));
        if (lam && *lam > 0) throw std::domain_error("indicial roots at an irregular point");
    }
    auto data = detail::local_solutions(Lt.cleared_coeffs(), 0);
    RationalRoots rr = rational_roots(data.indicial);
    std::sort(rr.roots.begin(), rr.roots.end());
    return {rr.roots, rr.complete};
}

struct ApparentWitness {
    bool apparent = false;
    int holomorphic_dim = 0;
    int verify_order = 0;
    std::vector<Series> basis;
};

/// true iff the formal power-series solution space at alpha has dimension
/// equal to the order, determined by the exact solution recurrence
inline ApparentWitness is_apparent(const DiffOp& L, const Rat& alpha, int verify_order) {
    auto polys = detail::translated_cleared(L, alpha);
    auto data = detail::local_solutions(polys, static_cast<std::size_t>(verify_order));
    // adequacy: verify_order must clear the largest nonnegative integer indicial root
    RationalRoots rr = rational_roots(data.indicial);
    long maxroot = 0;
    for (const Rat& r : rr.roots)
        if (r.get_den() == 1 && r >= 0) maxroot = std::max(maxroot, static_cast<long>(r.get_num().get_si()));
    if (verify_order < maxroot + static_cast<long>(L.order()))
        throw std::invalid_argument("is_apparent: verify_order too small");
    ApparentWitness w;
    w.holomorphic_dim = data.dim;
    w.verify_order = verify_order;
    w.basis = std::move(data.basis);
    w.apparent = (data.dim == static_cast<int>(L.order()));
    return w;
}

inline int default_verify_order(const DiffOp& L, const Rat& alpha) {
    auto data = detail::local_solutions(detail::translated_cleared(L, alpha), 0);
    RationalRoots rr = rational_roots(data.indicial);
    long maxroot = 0;
    for (const Rat& r : rr.roots)
        if (r.get_den() == 1 && r >= 0) maxroot = std::max(maxroot, static_cast<long>(r.get_num().get_si()));
    return static_cast<int>(L.order()) + static_cast<int>(maxroot) + 10;
}

inline SingularityReport classify_point(const DiffOp& L, const Rat& alpha) {
    SingularityReport rep;
    rep.point = alpha;
    DiffOp Lt = L.shift(alpha);
    std::size_t n = L.order();
    rep.lambda = lambda_at_zero(to_zero_normal_form(Lt));
    if (!detail::is_singular_at_zero(Lt)) {
        rep.kind = PointKind::ordinary;
        for (std::size_t k = 0; k < n; ++k) rep.exponents.push_back(Rat(static_cast<long>(k)));
        rep.holomorphic_solution_dim = static_cast<int>(n);
        return rep;
    }
    if (rep.lambda && *rep.lambda > 0) {
        rep.kind = PointKind::irregular;
        rep.exponents_complete = false;
        return rep;
    }
    rep.kind = PointKind::regular_singular;
    auto [roots, complete] = indicial_roots(L, alpha);
    rep.exponents = roots;
    rep.exponents_complete = complete;
    int vo = default_verify_order(L, alpha);
    ApparentWitness w = is_apparent(L, alpha, vo);
    rep.holomorphic_solution_dim = w.holomorphic_dim;
    rep.verify_order_used = vo;
    if (w.apparent) rep.kind = PointKind::apparent;
    return rep;
}

/// classification of infinity via the substitution u = 1/z
inline SingularityReport classify_infinity(const DiffOp& L) {
    if (L.order() < 1) throw std::invalid_argument("classify_infinity needs order >= 1");
    DiffOp Li = invert_variable(L);
    SingularityReport rep = classify_point(Li, Rat(0));
    rep.point = std::nullopt;
    return rep;
}

/// classify all rational roots of the cleared leading coefficient plus infinity
inline FuchsSummary fuchs_summary(const DiffOp& L) {
    if (L.order() < 1) throw std::invalid_argument("fuchs_summary needs order >= 1");
    FuchsSummary sum;
    std::vector<Poly> q = L.cleared_coeffs();
    RationalRoots rr = rational_roots(q.back());
    sum.all_points_resolved = rr.complete;
    std::vector<Rat> pts = rr.roots;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const Rat& a : pts) sum.reports.push_back(classify_point(L, a));
    sum.reports.push_back(classify_infinity(L));
    for (const auto& r : sum.reports)
        if (r.kind == PointKind::irregular) sum.is_fuchsian = false;
    return sum;
}

}  // namespace gop
