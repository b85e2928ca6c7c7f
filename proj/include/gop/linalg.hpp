#pragma once

#include <cstddef>
#include <vector>

#include "gop/rational.hpp"

namespace gop {

/// Dense rectangular matrix over Q for exact elimination.
using DenseQ = std::vector<std::vector<Rat>>;

/// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<std::size_t> rref(DenseQ& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rat p = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(DenseQ m) { return rref(m).size(); }

/// Nullspace basis in RREF convention: one vector per free column, that free
/// variable set to 1 and all other free variables to 0. Vectors are ordered by
/// free column index, so the first basis vector has the most trailing free
/// variables equal to zero.
inline std::vector<std::vector<Rat>> nullspace(DenseQ m, std::size_t cols) {
    if (m.empty()) m.push_back(std::vector<Rat>(cols, Rat(0)));
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace gop
