#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gop/rational.hpp"

namespace gop {

/// Dense univariate polynomial over Q, lowest degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(const Rat& constant) : c_{constant} { trim(); }
    Poly(long constant) : c_{Rat(constant)} { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rat(1)); }
    /// z^k
    static Poly monomial(std::size_t k, const Rat& coeff = Rat(1)) {
        std::vector<Rat> c(k + 1, Rat(0));
        c[k] = coeff;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    const std::vector<Rat>& coeffs() const { return c_; }

    /// coefficient of z^i (0 beyond the stored range)
    const Rat& coeff(std::size_t i) const {
        static const Rat kZero = 0;
        return i < c_.size() ? c_[i] : kZero;
    }

    const Rat& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        std::vector<Rat> r(c_);
        for (Rat& x : r) x = -x;
        return Poly(std::move(r));
    }

    Poly operator+(const Poly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    Poly operator*(const Rat& s) const {
        std::vector<Rat> r(c_);
        for (Rat& x : r) x *= s;
        return Poly(std::move(r));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return Poly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly pow(unsigned long e) const {
        Poly r = one();
        Poly b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// p(u + alpha), Taylor shift by Horner
    Poly shift(const Rat& alpha) const {
        Poly r;
        Poly lin(std::vector<Rat>{alpha, Rat(1)});
        for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + Poly(c_[i]);
        return r;
    }

    /// z^d * p(1/z) with d = degree (coefficient reversal); zero maps to zero
    Poly reverse() const {
        std::vector<Rat> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        return *this * (Rat(1) / leading());
    }

    /// quotient and remainder of Euclidean division
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly r = *this;
        std::vector<Rat> q(std::max(degree() - d.degree() + 1, 0), Rat(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t k = static_cast<std::size_t>(r.degree() - d.degree());
            Rat f = r.leading() / d.leading();
            q[k] = f;
            r -= d * monomial(k, f);
        }
        return {Poly(std::move(q)), r};
    }

    Poly operator/(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    /// monic gcd
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            a = a.divmod(b).second;
            std::swap(a, b);
        }
        return a.is_zero() ? a : a.monic();
    }

    /// monic lcm
    static Poly lcm(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly g = gcd(a, b);
        return ((a * b) / g).monic();
    }

    /// multiplicity of alpha as a root
    int root_order(const Rat& alpha) const {
        if (is_zero()) throw std::domain_error("root order of zero polynomial");
        int m = 0;
        Poly p = *this;
        Poly lin(std::vector<Rat>{-alpha, Rat(1)});
        while (p.eval(alpha) == 0) {
            p = p / lin;
            ++m;
        }
        return m;
    }

    /// max |coefficient|, 0 for the zero polynomial
    Rat house() const {
        Rat h = 0;
        for (const Rat& x : c_) h = std::max(h, gop::house(x));
        return h;
    }

    /// least positive integer clearing all coefficient denominators
    Int coeff_den() const { return den_of_rationals(c_); }

    /// divide out integer content and normalize the sign of the leading coefficient
    Poly primitive() const {
        if (is_zero()) return Poly();
        Int d = coeff_den();
        Int g = 0;
        for (const Rat& x : c_) g = int_gcd(g, Int(x.get_num() * (d / x.get_den())));
        Rat f = Rat(d) / Rat(g);
        if (leading() < 0) f = -f;
        return *this * f;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

/// Rational roots of p with multiplicity, plus a flag telling whether the
/// full root set was resolved over Q (false when an irrational factor remains).
struct RationalRoots {
    std::vector<Rat> roots;
    bool complete = true;  // all complex roots accounted for
};

namespace detail {

inline std::vector<Int> divisors(Int n) {
    // trial division; desk-scale constants keep this cheap
    std::vector<std::pair<Int, unsigned>> fac;
    n = abs(n);
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            fac.emplace_back(p, e);
        }
    }
    if (n > 1) fac.emplace_back(n, 1);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : fac) {
        std::size_t sz = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace detail

inline RationalRoots rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("roots of zero polynomial");
    RationalRoots out;
    Poly q = p;
    // strip powers of z
    while (!q.is_zero() && q.coeff(0) == 0) {
        out.roots.push_back(Rat(0));
        q = q / Poly::monomial(1);
    }
    if (q.degree() == 0) return out;
    // clear denominators to an integer polynomial
    Poly zq = q * Rat(q.coeff_den());
    std::vector<Int> ps = detail::divisors(Int(zq.coeff(0).get_num()));
    std::vector<Int> qs = detail::divisors(Int(zq.leading().get_num()));
    std::vector<Rat> candidates;
    for (const Int& a : ps)
        for (const Int& b : qs) {
            Rat r(a, b);
            r.canonicalize();
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    for (const Rat& r : candidates) {
        while (!q.is_zero() && q.degree() > 0 && q.eval(r) == 0) {
            out.roots.push_back(r);
            q = q / Poly(std::vector<Rat>{-r, Rat(1)});
        }
    }
    out.complete = q.degree() <= 0;
    return out;
}

inline std::string poly_to_string(const Poly& p, const std::string& var = "z") {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
        const Rat& c = p.coeff(i);
        if (c == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        std::string term;
        if (i == 0) {
            term = a.get_str();
        } else {
            if (a != 1) term = a.get_str() + "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        s += term;
    }
    return s;
}

}  // namespace gop
