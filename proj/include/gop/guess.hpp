#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gop/diffop.hpp"
#include "gop/linalg.hpp"
#include "gop/series.hpp"

namespace gop {

struct GuessResult {
    DiffOp op;
    std::size_t order = 0;
    long degree = 0;            // max degree over the polynomial coefficients
    std::size_t verified_to = 0;  // series coefficients on which L(f) vanishes
};

namespace detail {

inline std::optional<std::vector<Rat>> annihilator_nullvector(const Series& f, std::size_t r,
                                                              long d, std::size_t solve_rows) {
    std::size_t cols = (r + 1) * static_cast<std::size_t>(d + 1);
    std::vector<Series> der{f};
    for (std::size_t k = 1; k <= r; ++k) der.push_back(der.back().derivative());
    DenseQ M(solve_rows, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t m = 0; m < solve_rows; ++m)
        for (std::size_t k = 0; k <= r; ++k)
            for (long i = 0; i <= d; ++i) {
                if (static_cast<long>(m) < i) continue;
                M[m][k * (d + 1) + static_cast<std::size_t>(i)] =
                    der[k][m - static_cast<std::size_t>(i)];
            }
    auto basis = nullspace(M, cols);
    if (basis.empty()) return std::nullopt;
    return basis.front();
}

}  // namespace detail

/// Smallest-order (then smallest-degree) operator with polynomial coefficients
/// annihilating f: solved by exact nullspace on the leading coefficients, then
/// verified on verify_terms extra terms; candidates failing verification are
/// discarded, so absence of a result is an exhaustive minimality statement
/// within the bounds. Output has integer coefficients, content 1, and positive
/// leading coefficient of the highest-order polynomial.
inline std::optional<GuessResult> guess_min_operator(const Series& f, std::size_t max_order,
                                                     long max_degree,
                                                     std::size_t verify_terms = 0) {
    if (f.is_zero()) throw std::invalid_argument("guess_min_operator: zero series");
    std::size_t K = f.truncation();
    if (K < (max_order + 1) * static_cast<std::size_t>(max_degree + 1) + verify_terms + max_order)
        throw std::invalid_argument("guess_min_operator: truncation too short for the bounds");
    for (std::size_t r = 1; r <= max_order; ++r)
        for (long d = 0; d <= max_degree; ++d) {
            std::size_t total_rows = K - r + 1;  // reliable coefficients of L(f)
            if (total_rows <= verify_terms) continue;
            auto v = detail::annihilator_nullvector(f, r, d, total_rows - verify_terms);
            if (!v) continue;
            std::vector<RatFunc> coeffs;
            coeffs.reserve(r + 1);
            bool nontrivial = false;
            for (std::size_t k = 0; k <= r; ++k) {
                std::vector<Rat> pc(v->begin() + static_cast<long>(k) * (d + 1),
                                    v->begin() + static_cast<long>(k + 1) * (d + 1));
                Poly p{std::move(pc)};
                if (!p.is_zero()) nontrivial = true;
                coeffs.emplace_back(std::move(p));
            }
            if (!nontrivial) continue;
            DiffOp L{std::move(coeffs)};
            if (!apply(L, f).is_zero()) continue;  // failed the held-out terms
            // canonical form: integer coefficients, content 1, positive leading term
            Int den = 1;
            for (const RatFunc& a : L.coeffs()) den = int_lcm(den, a.num().coeff_den());
            std::vector<RatFunc> scaled;
            Int content = 0;
            for (const RatFunc& a : L.coeffs()) {
                Poly p = (a * RatFunc(Poly(Rat(den)))).num();
                for (const Rat& c : p.coeffs()) content = int_gcd(content, Int(c.get_num()));
                scaled.emplace_back(std::move(p));
            }
            if (content == 0) content = 1;
            Rat lead = scaled.back().num().leading();
            Rat scale = Rat(1) / Rat(content);
            if (lead < 0) scale = -scale;
            for (RatFunc& a : scaled) a = a * scale;
            DiffOp out{std::move(scaled)};
            GuessResult res{out, out.order(), 0, K - out.order() + 1};
            for (const RatFunc& a : out.coeffs())
                res.degree = std::max(res.degree, static_cast<long>(a.num().degree()));
            return res;
        }
    return std::nullopt;
}

}  // namespace gop
