#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gop/poly.hpp"
#include "gop/ratfunc.hpp"

namespace gop {

/// Exact truncated power series c_0 + c_1 z + ... + c_K z^K.
class Series {
  public:
    Series() : c_{Rat(0)} {}
    explicit Series(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(Rat(0));
    }
    /// zero series truncated at K
    static Series zeros(std::size_t K) { return Series(std::vector<Rat>(K + 1, Rat(0))); }

    std::size_t truncation() const { return c_.size() - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](std::size_t i) const {
        static const Rat kZero = 0;
        return i < c_.size() ? c_[i] : kZero;
    }
    Rat& at(std::size_t i) { return c_[i]; }

    bool is_zero() const {
        for (const Rat& x : c_)
            if (x != 0) return false;
        return true;
    }

    /// index of first nonzero coefficient; truncation()+1 if none
    std::size_t order() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return i;
        return c_.size();
    }

    Series truncate(std::size_t K) const {
        std::vector<Rat> r(c_.begin(), c_.begin() + std::min(c_.size(), K + 1));
        r.resize(K + 1, Rat(0));
        return Series(std::move(r));
    }

    Series operator+(const Series& o) const {
        std::size_t K = std::min(truncation(), o.truncation());
        std::vector<Rat> r(K + 1);
        for (std::size_t i = 0; i <= K; ++i) r[i] = (*this)[i] + o[i];
        return Series(std::move(r));
    }

    Series operator-(const Series& o) const {
        std::size_t K = std::min(truncation(), o.truncation());
        std::vector<Rat> r(K + 1);
        for (std::size_t i = 0; i <= K; ++i) r[i] = (*this)[i] - o[i];
        return Series(std::move(r));
    }

    Series operator*(const Series& o) const {
        std::size_t K = std::min(truncation(), o.truncation());
        std::vector<Rat> r(K + 1, Rat(0));
        for (std::size_t i = 0; i <= K; ++i) {
            if ((*this)[i] == 0) continue;
            for (std::size_t j = 0; i + j <= K; ++j) r[i + j] += (*this)[i] * o[j];
        }
        return Series(std::move(r));
    }

    Series operator*(const Rat& s) const {
        std::vector<Rat> r(c_);
        for (Rat& x : r) x *= s;
        return Series(std::move(r));
    }

    /// truncation drops by one
    Series derivative() const {
        if (c_.size() == 1) return Series(std::vector<Rat>{Rat(0)});
        std::vector<Rat> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return Series(std::move(r));
    }

    /// multiply by a polynomial, keeping the truncation order
    Series mul_poly(const Poly& p) const {
        std::size_t K = truncation();
        std::vector<Rat> r(K + 1, Rat(0));
        for (int i = 0; i <= p.degree(); ++i) {
            if (p.coeff(i) == 0) continue;
            for (std::size_t j = 0; static_cast<std::size_t>(i) + j <= K; ++j)
                r[i + j] += p.coeff(i) * (*this)[j];
        }
        return Series(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    bool operator==(const Series& o) const { return c_ == o.c_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

  private:
    std::vector<Rat> c_;
};

inline Series series_from_poly(const Poly& p, std::size_t K) {
    std::vector<Rat> r(K + 1, Rat(0));
    for (int i = 0; i <= p.degree() && static_cast<std::size_t>(i) <= K; ++i) r[i] = p.coeff(i);
    return Series(std::move(r));
}

/// Taylor expansion at 0 of a rational function regular there.
inline Series series_from_ratfunc(const RatFunc& f, std::size_t K) {
    if (!f.finite_at(Rat(0))) throw std::domain_error("rational function has a pole at 0");
    const Poly& num = f.num();
    const Poly& den = f.den();
    Rat d0 = den.coeff(0);
    std::vector<Rat> r(K + 1, Rat(0));
    for (std::size_t k = 0; k <= K; ++k) {
        Rat acc = num.coeff(k);
        for (std::size_t j = 1; j <= k && static_cast<int>(j) <= den.degree(); ++j)
            acc -= den.coeff(j) * r[k - j];
        r[k] = acc / d0;
    }
    return Series(std::move(r));
}

// --- built-in families -----------------------------------------------------

inline Series exp_series(std::size_t K) {
    std::vector<Rat> r(K + 1);
    for (std::size_t n = 0; n <= K; ++n) r[n] = Rat(1) / Rat(factorial(n));
    return Series(std::move(r));
}

/// -log(1-z) = sum_{n>=1} z^n / n
inline Series neg_log1m_series(std::size_t K) {
    std::vector<Rat> r(K + 1, Rat(0));
    for (std::size_t n = 1; n <= K; ++n) r[n] = Rat(1, static_cast<long>(n));
    return Series(std::move(r));
}

/// Gauss hypergeometric 2F1(a, b; c; z) with rational parameters
inline Series hypergeometric_series(const Rat& a, const Rat& b, const Rat& c, std::size_t K) {
    std::vector<Rat> r(K + 1);
    Rat term = 1;
    for (std::size_t n = 0; n <= K; ++n) {
        r[n] = term;
        Rat ln = Rat(static_cast<long>(n));
        Rat denom = (c + ln) * (Rat(1) + ln);
        if (denom == 0) throw std::domain_error("hypergeometric parameter pole");
        term *= (a + ln) * (b + ln) / denom;
    }
    return Series(std::move(r));
}

// --- Borel / Laplace coefficient maps --------------------------------------

/// c_n -> n! c_n (E-side series to its G-side Borel transform)
inline Series borel(const Series& f) {
    std::vector<Rat> r(f.coeffs());
    for (std::size_t n = 0; n < r.size(); ++n) r[n] *= Rat(factorial(n));
    return Series(std::move(r));
}

/// c_n -> c_n / n!; inverse of borel
inline Series laplace_inverse_of_borel(const Series& g) {
    std::vector<Rat> r(g.coeffs());
    for (std::size_t n = 0; n < r.size(); ++n) r[n] /= Rat(factorial(n));
    return Series(std::move(r));
}

/// c_n -> xi^n c_n, i.e. f(xi*z)
inline Series scale_variable(const Series& f, const Rat& xi) {
    if (xi == 0) throw std::invalid_argument("scale_variable requires nonzero scale");
    std::vector<Rat> r(f.coeffs());
    Rat p = 1;
    for (std::size_t n = 0; n < r.size(); ++n) {
        r[n] *= p;
        p *= xi;
    }
    return Series(std::move(r));
}

// --- division by (z - xi) ---------------------------------------------------

enum class ZeroCheck { checked, assert_zero };

struct DivisionResult {
    Series quotient;
    Rat residual;          // truncated value f(xi) observed before dividing
    ZeroCheck mode;
};

/// Divide f by (z - xi), assuming f(xi) = 0. In checked mode the truncated
/// value of f at xi must either vanish exactly or be dominated by the last
/// retained terms (a tail-sized residual); assert_zero skips the test.
inline DivisionResult divide_out_zero(const Series& f, const Rat& xi, std::size_t K_out,
                                      ZeroCheck mode = ZeroCheck::checked) {
    std::size_t K = f.truncation();
    if (K_out + 1 > K) throw std::invalid_argument("divide_out_zero: truncation too short");
    Rat residual = f.eval(xi);
    if (xi == 0) {
        if (f[0] != 0) throw std::domain_error("divide_out_zero: f(0) != 0");
        std::vector<Rat> r(K_out + 1);
        for (std::size_t i = 0; i <= K_out; ++i) r[i] = f[i + 1];
        return {Series(std::move(r)), residual, mode};
    }
    if (mode == ZeroCheck::checked && residual != 0) {
        Rat pk = 1;  // xi^{K-1}
        for (std::size_t i = 0; i + 1 < K; ++i) pk *= xi;
        Rat last = std::max(house(f[K] * pk * xi), house(f[K - 1] * pk));
        Rat bound = Rat(static_cast<long>(K) * static_cast<long>(K)) * last;
        if (house(residual) > bound)
            throw std::domain_error("divide_out_zero: truncated series does not vanish at xi");
    }
    // f = (z - xi) g  <=>  g_k = (g_{k-1} - f_k)/xi, g_{-1} = 0
    std::vector<Rat> g(K_out + 1);
    Rat prev = 0;
    for (std::size_t k = 0; k <= K_out; ++k) {
        g[k] = (prev - f[k]) / xi;
        prev = g[k];
    }
    return {Series(std::move(g)), residual, mode};
}

// --- arithmetic size profile ------------------------------------------------

enum class SeriesMode { E, G };

/// Growth diagnostics for the declared normalization: E-mode measures
/// a_n = n! c_n, G-mode measures a_n = c_n.
struct ArithmeticProfile {
    SeriesMode mode;
    std::vector<Rat> houses;        // |a_n|
    std::vector<Int> dens;          // den(a_0..a_n), nondecreasing
    std::vector<double> eps_house;  // log|a_n| / log n!, n >= 2
    std::vector<double> eps_den;    // log den_n / log n!, n >= 2
    std::vector<double> geo_house;  // |a_n|^{1/(n+1)}
    std::vector<double> geo_den;    // den_n^{1/(n+1)}
};

inline ArithmeticProfile profile(const Series& f, SeriesMode mode) {
    if (f.truncation() < 4) throw std::invalid_argument("profile needs at least 5 terms");
    ArithmeticProfile p;
    p.mode = mode;
    Int d = 1;
    for (std::size_t n = 0; n <= f.truncation(); ++n) {
        Rat a = f[n];
        if (mode == SeriesMode::E) a *= Rat(factorial(n));
        p.houses.push_back(house(a));
        d = int_lcm(d, a.get_den());
        p.dens.push_back(d);
        double la = (a == 0) ? 0.0 : (log_int(Int(abs(a.get_num()))) - log_int(Int(a.get_den())));
        double ld = log_int(d);
        if (n >= 2) {
            double lf = log_factorial(static_cast<unsigned long>(n));
            p.eps_house.push_back(la / lf);
            p.eps_den.push_back(ld / lf);
        }
        p.geo_house.push_back(std::exp(la / static_cast<double>(n + 1)));
        p.geo_den.push_back(std::exp(ld / static_cast<double>(n + 1)));
    }
    return p;
}

}  // namespace gop
