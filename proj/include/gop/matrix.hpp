#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gop/ratfunc.hpp"

namespace gop {

/// Square matrix over a field-like scalar (Rat or RatFunc).
template <typename T>
class Matrix {
  public:
    Matrix() : n_(0) {}
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, T()) {}
    Matrix(std::size_t n, std::vector<T> entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != n * n) throw std::invalid_argument("matrix entry count mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t dim() const { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_dim(o);
        Matrix r(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_dim(o);
        Matrix r(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        check_dim(o);
        Matrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                if ((*this)(i, k) == T()) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    r(i, j) += (*this)(i, k) * o(k, j);
            }
        return r;
    }

    Matrix operator*(const T& s) const {
        Matrix r = *this;
        for (T& x : r.a_) x = x * s;
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != n_) throw std::invalid_argument("vector size mismatch");
        std::vector<T> r(n_, T());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix derivative() const
        requires requires(T x) { x.derivative(); }
    {
        Matrix r(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].derivative();
        return r;
    }

    T det() const {
        Matrix m = *this;
        T d(1);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t piv = col;
            while (piv < n_ && m(piv, col) == T()) ++piv;
            if (piv == n_) return T();
            if (piv != col) {
                for (std::size_t j = 0; j < n_; ++j) std::swap(m(piv, j), m(col, j));
                d = d * T(-1);
            }
            d = d * m(col, col);
            for (std::size_t i = col + 1; i < n_; ++i) {
                if (m(i, col) == T()) continue;
                T f = m(i, col) / m(col, col);
                for (std::size_t j = col; j < n_; ++j) m(i, j) = m(i, j) - f * m(col, j);
            }
        }
        return d;
    }

    Matrix inverse() const {
        Matrix m = *this;
        Matrix inv = identity(n_);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t piv = col;
            while (piv < n_ && m(piv, col) == T()) ++piv;
            if (piv == n_) throw std::domain_error("singular matrix");
            if (piv != col)
                for (std::size_t j = 0; j < n_; ++j) {
                    std::swap(m(piv, j), m(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            T p = m(col, col);
            for (std::size_t j = 0; j < n_; ++j) {
                m(col, j) = m(col, j) / p;
                inv(col, j) = inv(col, j) / p;
            }
            for (std::size_t i = 0; i < n_; ++i) {
                if (i == col || m(i, col) == T()) continue;
                T f = m(i, col);
                for (std::size_t j = 0; j < n_; ++j) {
                    m(i, j) = m(i, j) - f * m(col, j);
                    inv(i, j) = inv(i, j) - f * inv(col, j);
                }
            }
        }
        return inv;
    }

  private:
    void check_dim(const Matrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    }

    std::size_t n_;
    std::vector<T> a_;
};

using MatRF = Matrix<RatFunc>;

/// monic least common multiple of all entry denominators; T*M has polynomial entries
inline Poly common_denominator_matrix(const MatRF& m) {
    Poly t = Poly::one();
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) t = Poly::lcm(t, m(i, j).den());
    return t;
}

}  // namespace gop
