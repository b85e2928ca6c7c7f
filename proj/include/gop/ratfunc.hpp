#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "gop/poly.hpp"

namespace gop {

/// Reduced rational function over Q: gcd(num, den) = 1, den monic.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(const Rat& c) : num_(Poly(c)), den_(Poly::one()) {}
    RatFunc(long c) : num_(Poly(Rat(c))), den_(Poly::one()) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Poly::one()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const { return RatFunc(-num_, den_, already_reduced{}); }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    /// quotient rule with immediate reduction
    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    Rat eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d == 0) throw std::domain_error("evaluation at a pole");
        return num_.eval(x) / d;
    }

    bool finite_at(const Rat& x) const { return den_.eval(x) != 0; }

    /// order of the pole at alpha: positive for poles, negative for zeros,
    /// 0 when finite and nonzero there; rejects the zero function
    int pole_order(const Rat& alpha) const {
        if (is_zero()) throw std::domain_error("pole order of the zero function");
        return den_.root_order(alpha) - num_.root_order(alpha);
    }

    /// f(u + alpha)
    RatFunc shift(const Rat& alpha) const { return RatFunc(num_.shift(alpha), den_.shift(alpha)); }

    /// f(1/u)
    RatFunc invert_variable() const {
        if (is_zero()) return zero();
        int dn = num_.degree(), dd = den_.degree();
        Poly n = num_.reverse(), d = den_.reverse();
        if (dd > dn)
            n = n * Poly::monomial(static_cast<std::size_t>(dd - dn));
        else if (dn > dd)
            d = d * Poly::monomial(static_cast<std::size_t>(dn - dd));
        return RatFunc(std::move(n), std::move(d));
    }

  private:
    struct already_reduced {};
    RatFunc(Poly num, Poly den, already_reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::one();
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
        Rat lead = den_.leading();
        num_ = num_ * (Rat(1) / lead);
        den_ = den_ * (Rat(1) / lead);
    }

    Poly num_;
    Poly den_;
};

inline RatFunc operator*(const Rat& s, const RatFunc& f) { return RatFunc(s) * f; }

inline std::string ratfunc_to_string(const RatFunc& f, const std::string& var = "z") {
    if (f.is_polynomial()) return poly_to_string(f.num(), var);
    return "(" + poly_to_string(f.num(), var) + ")/(" + poly_to_string(f.den(), var) + ")";
}

}  // namespace gop
