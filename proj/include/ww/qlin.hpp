#pragma once

#include <optional>
#include <vector>

#include "ww/rational.hpp"

namespace ww::detail {

using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

inline Rat rmat_det(RMat m) {
    const size_t n = m.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            m[piv].swap(m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

// solves a x = b; nullopt when a is singular
inline std::optional<RVec> rmat_solve(RMat a, RVec b) {
    const size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            a[piv].swap(a[col]);
            std::swap(b[piv], b[col]);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    RVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

inline size_t rmat_rank(RMat m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        m[piv].swap(m[rank]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline RMat rmat_inverse(const RMat& m) {
    const size_t n = m.size();
    RMat inv(n, RVec(n, 0));
    for (size_t k = 0; k < n; ++k) {
        RVec e(n, 0);
        e[k] = 1;
        auto col = rmat_solve(m, e);
        if (!col) throw usage_error("rmat_inverse: singular matrix");
        for (size_t i = 0; i < n; ++i) inv[i][k] = (*col)[i];
    }
    return inv;
}

} // namespace ww::detail
