#pragma once

#include <optional>
#include <utility>

#include "ww/quat.hpp"

namespace ww {

// Row-major 2x2 quaternion matrix ((a, b), (c, d)).
struct Mat2 {
    Quat a, b, c, d;
};

inline bool operator==(const Mat2& m, const Mat2& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
}
inline bool operator!=(const Mat2& m, const Mat2& n) { return !(m == n); }
inline bool operator<(const Mat2& m, const Mat2& n) {
    if (m.a != n.a) return m.a < n.a;
    if (m.b != n.b) return m.b < n.b;
    if (m.c != n.c) return m.c < n.c;
    return m.d < n.d;
}

inline Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}
inline Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

inline Mat2 mat_identity(const AlgebraSpec* alg) {
    return {quat_one(alg), quat_zero(alg), quat_zero(alg), quat_one(alg)};
}
inline Mat2 mat_J(const AlgebraSpec* alg) {
    return {quat_zero(alg), quat_one(alg), quat_one(alg), quat_zero(alg)};
}
inline Mat2 mat_T(const Quat& w) {
    return {quat_one(w.alg), w, quat_zero(w.alg), quat_one(w.alg)};
}
inline Mat2 mat_C(const Quat& u, const Quat& v) {
    detail::same_alg(u, v);
    return {u, quat_zero(u.alg), quat_zero(u.alg), v};
}

// adjoint X* = conjugate transpose
inline Mat2 adjoint(const Mat2& m) { return {conj(m.a), conj(m.c), conj(m.b), conj(m.d)}; }

// square of the Dieudonne determinant
inline Rat det2sq(const Mat2& m) {
    return nrd(m.a * m.d) + nrd(m.b * m.c) - trd(m.a * conj(m.c) * m.d * conj(m.b));
}

// alternative expression n(a c^{-1} d c - b c), valid when c != 0
inline Rat det2sq_via_c(const Mat2& m) {
    if (m.c.is_zero()) throw usage_error("det2sq_via_c requires c != 0");
    return nrd(m.a * inverse(m.c) * m.d * m.c - m.b * m.c);
}

// 2x2 inverse over the quaternion division ring
inline Mat2 inverse(const Mat2& m) {
    if (det2sq(m) == 0) throw usage_error("inverse of singular Mat2");
    if (!m.a.is_zero()) {
        Quat ai = inverse(m.a);
        Quat s = m.d - m.c * ai * m.b; // Schur complement, nonzero since m invertible
        Quat si = inverse(s);
        return {ai + ai * m.b * si * m.c * ai, -(ai * m.b * si),
                -(si * m.c * ai), si};
    }
    // a = 0 forces b, c invertible
    Quat bi = inverse(m.b);
    Quat ci = inverse(m.c);
    return {-(ci * m.d * bi), ci, bi, quat_zero(m.a.alg)};
}

// left linear action on column pairs of the right module A x A
inline std::pair<Quat, Quat> apply(const Mat2& m, const Quat& x, const Quat& y) {
    return {m.a * x + m.b * y, m.c * x + m.d * y};
}

// Action by homographies on P^1(A) = A + {infinity}; nullopt encodes infinity.
// Total for det2sq != 0.
inline std::optional<Quat> mobius(const Mat2& g, const std::optional<Quat>& z) {
    if (!z.has_value()) {
        if (g.c.is_zero()) return std::nullopt;
        return g.a * inverse(g.c);
    }
    Quat denom = g.c * (*z) + g.d;
    if (denom.is_zero()) return std::nullopt; // pole z = -c^{-1} d
    return (g.a * (*z) + g.b) * inverse(denom);
}

inline std::string mat_str(const Mat2& m) {
    return "[" + quat_str(m.a) + " " + quat_str(m.b) + "; " + quat_str(m.c) + " " +
           quat_str(m.d) + "]";
}

} // namespace ww
