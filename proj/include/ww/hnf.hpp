#pragma once

#include <vector>

#include "ww/rational.hpp"

namespace ww::detail {

using IRow = std::vector<Int>;
using IMat = std::vector<IRow>;

// Row Hermite normal form, in place.  After the call the nonzero rows are on
// top, pivots move strictly right, pivot entries are positive and entries
// above a pivot are reduced into [0, pivot).  Returns the rank.  When
// transform is non-null it receives a unimodular U with U * input = output.
inline size_t hnf_rows(IMat& m, IMat* transform = nullptr) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    if (transform) {
        transform->assign(rows, IRow(rows, 0));
        for (size_t i = 0; i < rows; ++i) (*transform)[i][i] = 1;
    }
    auto row_sub = [&](size_t dst, size_t src, const Int& q) {
        if (q == 0) return;
        for (size_t j = 0; j < cols; ++j) m[dst][j] -= q * m[src][j];
        if (transform)
            for (size_t j = 0; j < rows; ++j) (*transform)[dst][j] -= q * (*transform)[src][j];
    };
    auto row_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        m[i].swap(m[j]);
        if (transform) (*transform)[i].swap((*transform)[j]);
    };
    auto row_neg = [&](size_t i) {
        for (auto& v : m[i]) v = -v;
        if (transform)
            for (auto& v : (*transform)[i]) v = -v;
    };

    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // euclidean reduction of the column below pivot_row
        while (true) {
            size_t best = rows;
            for (size_t i = pivot_row; i < rows; ++i)
                if (m[i][col] != 0 &&
                    (best == rows || abs(m[i][col]) < abs(m[best][col])))
                    best = i;
            if (best == rows) break;
            row_swap(pivot_row, best);
            bool any = false;
            for (size_t i = pivot_row + 1; i < rows; ++i)
                if (m[i][col] != 0) {
                    row_sub(i, pivot_row, floor_div(m[i][col], abs(m[pivot_row][col])) *
                                              (m[pivot_row][col] > 0 ? 1 : -1));
                    any = any || m[i][col] != 0;
                }
            if (!any) break;
        }
        if (m[pivot_row][col] == 0) continue;
        if (m[pivot_row][col] < 0) row_neg(pivot_row);
        for (size_t i = 0; i < pivot_row; ++i)
            row_sub(i, pivot_row, floor_div(m[i][col], m[pivot_row][col]));
        ++pivot_row;
    }
    return pivot_row;
}

// kernel of the row map u -> u * m, as HNF rows
inline IMat left_kernel(IMat m) {
    IMat u;
    size_t rank = hnf_rows(m, &u);
    IMat ker(u.begin() + static_cast<long>(rank), u.end());
    hnf_rows(ker);
    return ker;
}

inline Int content(const IMat& m) {
    Int g = 0;
    for (const auto& row : m)
        for (const auto& v : row) g = gcd(g, v);
    return g;
}

// determinant of a square HNF matrix (product of the diagonal)
inline Int hnf_det(const IMat& m) {
    Int d = 1;
    for (size_t i = 0; i < m.size(); ++i) d *= m[i][i];
    return d;
}

} // namespace ww::detail
