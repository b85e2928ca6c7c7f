#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "gop/ratfunc.hpp"
#include "gop/weyl.hpp"

namespace gop {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

namespace detail {

/// Recursive-descent parser over a small value policy. Grammar:
///   expr   := '-'? term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*        ('/' only when the policy allows)
///   factor := atom ('^' uint)?
///   atom   := '(' expr ')' | 'z' | 'D' | rational
template <class Policy>
class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    typename Policy::Value run() {
        auto v = expr();
        skip();
        if (i_ != s_.size()) throw ParseError("unexpected character", i_);
        return v;
    }

  private:
    using V = typename Policy::Value;

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    V expr() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++i_;
        }
        V v = term();
        if (neg) v = Policy::neg(v);
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++i_;
                v = Policy::add(v, term());
            } else if (c == '-') {
                ++i_;
                v = Policy::sub(v, term());
            } else {
                return v;
            }
        }
    }

    V term() {
        V v = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++i_;
                v = Policy::mul(v, factor());
            } else if (c == '/' && Policy::kAllowDivision) {
                std::size_t at = i_;
                ++i_;
                v = Policy::div(v, factor(), at);
            } else {
                return v;
            }
        }
    }

    V factor() {
        V v = atom();
        if (peek() == '^') {
            ++i_;
            skip();
            if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
                throw ParseError("exponent must be a nonnegative integer", i_);
            unsigned long e = 0;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                e = e * 10 + static_cast<unsigned long>(s_[i_] - '0');
                if (e > 4096) throw ParseError("exponent too large", i_);
                ++i_;
            }
            v = Policy::pow(v, e);
        }
        return v;
    }

    V atom() {
        char c = peek();
        if (c == '(') {
            ++i_;
            V v = expr();
            if (peek() != ')') throw ParseError("expected ')'", i_);
            ++i_;
            return v;
        }
        if (c == 'z') {
            ++i_;
            return Policy::var_z();
        }
        if (c == 'D') {
            std::size_t at = i_;
            ++i_;
            return Policy::var_d(at);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string tok;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                tok += s_[i_++];
            // a '/' directly followed by digits is part of a rational literal
            if (i_ + 1 < s_.size() && s_[i_] == '/' &&
                std::isdigit(static_cast<unsigned char>(s_[i_ + 1])) && !Policy::kAllowDivision) {
                tok += s_[i_++];
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                    tok += s_[i_++];
            }
            Rat r(tok);
            r.canonicalize();
            return Policy::from_rat(r);
        }
        throw ParseError("expected '(', 'z', 'D' or a number", i_);
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

struct WeylPolicy {
    using Value = WeylPoly;
    static constexpr bool kAllowDivision = false;
    static Value from_rat(const Rat& r) { return WeylPoly::constant(r); }
    static Value var_z() { return WeylPoly::z(); }
    static Value var_d(std::size_t) { return WeylPoly::d(); }
    static Value neg(const Value& v) { return v * Rat(-1); }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value sub(const Value& a, const Value& b) { return a - b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value div(const Value&, const Value&, std::size_t at) {
        throw ParseError("division is not allowed here", at);  // unreachable by grammar
    }
    static Value pow(const Value& v, unsigned long e) { return v.pow(e); }
};

struct RatFuncPolicy {
    using Value = RatFunc;
    static constexpr bool kAllowDivision = true;
    static Value from_rat(const Rat& r) { return RatFunc(Poly(r)); }
    static Value var_z() { return RatFunc(Poly::monomial(1)); }
    static Value var_d(std::size_t at) {
        throw ParseError("'D' is not allowed in a rational function", at);
    }
    static Value neg(const Value& v) { return -v; }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value sub(const Value& a, const Value& b) { return a - b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value div(const Value& a, const Value& b, std::size_t at) {
        if (b.is_zero()) throw ParseError("division by zero", at);
        return a / b;
    }
    static Value pow(const Value& v, unsigned long e) {
        Value r = Value::one();
        for (unsigned long k = 0; k < e; ++k) r = r * v;
        return r;
    }
};

}  // namespace detail

/// parse an operator expression in z and D into the Weyl algebra
inline WeylPoly parse_weyl(const std::string& s) {
    return detail::Parser<detail::WeylPolicy>(s).run();
}

/// parse a rational-function expression in z (division allowed, no D)
inline RatFunc parse_ratfunc(const std::string& s) {
    return detail::Parser<detail::RatFuncPolicy>(s).run();
}

}  // namespace gop
