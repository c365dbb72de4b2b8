#pragma once

#include <array>
#include <vector>

#include "ww/rational.hpp"

namespace ww::detail {

using QVec4 = std::array<Rat, 4>;
using QMat4 = std::array<QVec4, 4>;

// Q(x) = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2
struct LdlForm {
    QMat4 u;
    QVec4 d;
};

inline LdlForm ldl_decompose(const QMat4& g) {
    LdlForm f;
    for (int i = 0; i < 4; ++i) {
        Rat di = g[i][i];
        for (int l = 0; l < i; ++l) di -= f.d[l] * f.u[l][i] * f.u[l][i];
        if (di <= 0) throw invariant_violation("ldl_decompose: form not positive definite");
        f.d[i] = di;
        f.u[i][i] = 1;
        for (int j = i + 1; j < 4; ++j) {
            Rat v = g[i][j];
            for (int l = 0; l < i; ++l) v -= f.d[l] * f.u[l][i] * f.u[l][j];
            f.u[i][j] = v / di;
        }
    }
    return f;
}

// All integer vectors x with Q(x - center) <= bound, Q positive definite with
// Gram matrix g.  Exact interval bounds at every level; deterministic order.
inline std::vector<std::array<Int, 4>> enum_qform(const QMat4& g, const QVec4& center,
                                                  const Rat& bound) {
    std::vector<std::array<Int, 4>> out;
    if (bound < 0) return out;
    LdlForm f = ldl_decompose(g);
    std::array<Int, 4> x{};
    auto rec = [&](auto&& self, int level, const Rat& budget) -> void {
        Rat shift = center[level];
        for (int j = level + 1; j < 4; ++j)
            shift -= f.u[level][j] * (Rat(x[j]) - center[j]);
        Rat radius_sq = budget / f.d[level];
        Int lo = ceil_minus_sqrt(shift, radius_sq);
        Int hi = floor_plus_sqrt(shift, radius_sq);
        for (Int v = lo; v <= hi; ++v) {
            x[level] = v;
            Rat delta = Rat(v) - shift;
            Rat rest = budget - f.d[level] * delta * delta;
            if (rest < 0) continue;
            if (level == 0)
                out.push_back(x);
            else
                self(self, level - 1, rest);
        }
    };
    rec(rec, 3, bound);
    return out;
}

} // namespace ww::detail
