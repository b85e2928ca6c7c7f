#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "gop/poly.hpp"

namespace gop {

/// Element of the Weyl algebra Q[z, D] in normal order: every monomial is
/// written z^i D^j, keyed by (i, j) with nonzero coefficients only.
class WeylPoly {
  public:
    using Key = std::pair<unsigned long, unsigned long>;  // (z-power, D-power)

    WeylPoly() = default;

    static WeylPoly term(unsigned long i, unsigned long j, const Rat& c) {
        WeylPoly w;
        w.add_term(i, j, c);
        return w;
    }
    static WeylPoly z() { return term(1, 0, 1); }
    static WeylPoly d() { return term(0, 1, 1); }
    static WeylPoly constant(const Rat& c) { return term(0, 0, c); }

    const std::map<Key, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(unsigned long i, unsigned long j, const Rat& c) {
        if (c == 0) return;
        Rat& slot = t_[{i, j}];
        slot += c;
        if (slot == 0) t_.erase({i, j});
    }

    bool operator==(const WeylPoly& o) const { return t_ == o.t_; }
    bool operator!=(const WeylPoly& o) const { return !(*this == o); }

    WeylPoly operator+(const WeylPoly& o) const {
        WeylPoly r = *this;
        for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
        return r;
    }

    WeylPoly operator-(const WeylPoly& o) const {
        WeylPoly r = *this;
        for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, -c);
        return r;
    }

    WeylPoly operator*(const Rat& s) const {
        WeylPoly r;
        for (const auto& [k, c] : t_) r.add_term(k.first, k.second, c * s);
        return r;
    }

    /// noncommutative product, renormal-ordered via D^j z^k expansion
    WeylPoly operator*(const WeylPoly& o) const {
        WeylPoly r;
        for (const auto& [ka, ca] : t_)
            for (const auto& [kb, cb] : o.t_) {
                auto [i1, j1] = ka;
                auto [i2, j2] = kb;
                // z^{i1} D^{j1} z^{i2} D^{j2}
                unsigned long mmax = std::min(j1, i2);
                for (unsigned long m = 0; m <= mmax; ++m) {
                    Rat c = ca * cb * Rat(binomial(j1, m)) *
                            Rat(factorial(i2) / factorial(i2 - m));
                    r.add_term(i1 + i2 - m, j1 + j2 - m, c);
                }
            }
        return r;
    }

    WeylPoly pow(unsigned long e) const {
        WeylPoly r = constant(1);
        for (unsigned long k = 0; k < e; ++k) r = r * (*this);
        return r;
    }

  private:
    std::map<Key, Rat> t_;
};

/// algebra morphism generated by z -> D, D -> -z
inline WeylPoly fourier_laplace(const WeylPoly& a) {
    WeylPoly r;
    for (const auto& [k, c] : a.terms()) {
        auto [i, j] = k;
        // image of z^i D^j is D^i (-z)^j; normal-order D^i z^j
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        unsigned long mmax = std::min(i, j);
        for (unsigned long m = 0; m <= mmax; ++m) {
            Rat t = c * sign * Rat(binomial(i, m)) * Rat(factorial(j) / factorial(j - m));
            r.add_term(j - m, i - m, t);
        }
    }
    return r;
}

/// canonical serialization: descending lexicographic (i, j), terms "c*z^i*D^j";
/// later terms join with " + " / " - " so the output re-parses
inline std::string weyl_to_string(const WeylPoly& w) {
    if (w.is_zero()) return "0";
    std::string s;
    for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
        auto [i, j] = it->first;
        bool first = s.empty();
        Rat c = it->second;
        if (!first) {
            s += (c < 0) ? " - " : " + ";
            c = abs(c);
        }
        std::string term;
        if (i == 0 && j == 0) {
            term = c.get_str();
        } else {
            if (c != 1) term = c.get_str() + "*";
            if (i > 0) {
                term += "z";
                if (i > 1) term += "^" + std::to_string(i);
                if (j > 0) term += "*";
            }
            if (j > 0) {
                term += "D";
                if (j > 1) term += "^" + std::to_string(j);
            }
        }
        s += term;
    }
    return s;
}

}  // namespace gop
