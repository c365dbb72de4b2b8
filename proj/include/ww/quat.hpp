#pragma once

#include <array>
#include <compare>
#include <string>

#include "ww/algebra.hpp"
#include "ww/rational.hpp"

namespace ww {

// Exact quaternion in the basis (1, I, J, IJ) of a fixed AlgebraSpec.
struct Quat {
    std::array<Rat, 4> c{};
    const AlgebraSpec* alg = nullptr;

    Quat() = default;
    Quat(const AlgebraSpec* a, Rat c0, Rat c1, Rat c2, Rat c3)
        : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}, alg(a) {}

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
    bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }
};

inline Quat quat_zero(const AlgebraSpec* a) { return {a, 0, 0, 0, 0}; }
inline Quat quat_one(const AlgebraSpec* a) { return {a, 1, 0, 0, 0}; }
inline Quat quat_scalar(const AlgebraSpec* a, Rat r) { return {a, std::move(r), 0, 0, 0}; }
inline Quat quat_basis(const AlgebraSpec* a, int k) {
    Quat q = quat_zero(a);
    q.c[static_cast<size_t>(k)] = 1;
    return q;
}

namespace detail {
inline const AlgebraSpec* same_alg(const Quat& x, const Quat& y) {
    if (!x.alg || !y.alg) throw usage_error("quaternion without algebra");
    if (x.alg != y.alg) throw usage_error("mixed AlgebraSpec in quaternion operation");
    return x.alg;
}
} // namespace detail

inline bool operator==(const Quat& x, const Quat& y) {
    detail::same_alg(x, y);
    return x.c == y.c;
}
inline bool operator!=(const Quat& x, const Quat& y) { return !(x == y); }

// lexicographic coordinate order; used only as a canonical sort key
inline bool operator<(const Quat& x, const Quat& y) {
    detail::same_alg(x, y);
    for (int k = 0; k < 4; ++k)
        if (x.c[k] != y.c[k]) return x.c[k] < y.c[k];
    return false;
}

inline Quat operator+(const Quat& x, const Quat& y) {
    const AlgebraSpec* a = detail::same_alg(x, y);
    return {a, x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]};
}
inline Quat operator-(const Quat& x, const Quat& y) {
    const AlgebraSpec* a = detail::same_alg(x, y);
    return {a, x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]};
}
inline Quat operator-(const Quat& x) { return {x.alg, -x.c[0], -x.c[1], -x.c[2], -x.c[3]}; }

inline Quat operator*(const Rat& s, const Quat& x) {
    return {x.alg, s * x.c[0], s * x.c[1], s * x.c[2], s * x.c[3]};
}
inline Quat operator*(const Quat& x, const Rat& s) { return s * x; }
inline Quat operator/(const Quat& x, const Rat& s) {
    if (s == 0) throw usage_error("division of quaternion by zero scalar");
    return Rat(rat_den(s), 1) / Rat(rat_num(s), 1) * x;
}

// multiplication table: I^2 = si, J^2 = sj, IJ = K, JI = -K,
// IK = si J, KI = -si J, JK = -sj I, KJ = sj I, K^2 = -si sj
inline Quat operator*(const Quat& x, const Quat& y) {
    const AlgebraSpec* a = detail::same_alg(x, y);
    const Rat& si = a->sc_i;
    const Rat& sj = a->sc_j;
    const auto& p = x.c;
    const auto& q = y.c;
    return {a,
            p[0] * q[0] + si * p[1] * q[1] + sj * p[2] * q[2] - si * sj * p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] - sj * p[2] * q[3] + sj * p[3] * q[2],
            p[0] * q[2] + p[2] * q[0] + si * p[1] * q[3] - si * p[3] * q[1],
            p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]};
}

inline Quat conj(const Quat& x) { return {x.alg, x.c[0], -x.c[1], -x.c[2], -x.c[3]}; }

inline Rat trd(const Quat& x) { return 2 * x.c[0]; }

// reduced norm; positive definite since sc_i, sc_j < 0
inline Rat nrd(const Quat& x) {
    const Rat& si = x.alg->sc_i;
    const Rat& sj = x.alg->sc_j;
    return x.c[0] * x.c[0] - si * x.c[1] * x.c[1] - sj * x.c[2] * x.c[2] +
           si * sj * x.c[3] * x.c[3];
}

inline Quat inverse(const Quat& x) {
    if (x.is_zero()) throw usage_error("inverse of zero quaternion");
    Rat n = nrd(x);
    Quat xb = conj(x);
    return {x.alg, xb.c[0] / n, xb.c[1] / n, xb.c[2] / n, xb.c[3] / n};
}

// right division x * y^{-1}
inline Quat rdiv(const Quat& x, const Quat& y) { return x * inverse(y); }

inline std::string quat_str(const Quat& x) {
    return "(" + rat_str(x.c[0]) + "," + rat_str(x.c[1]) + "," + rat_str(x.c[2]) + "," +
           rat_str(x.c[3]) + ")";
}

} // namespace ww
