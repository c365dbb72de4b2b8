#pragma once

#include <vector>

#include "ww/cusp.hpp"
#include "ww/qlin.hpp"
#include "ww/uhp.hpp"

namespace ww {

// Binary Hamiltonian form f(u, v) = a n(u) + tr(conj(u) b v) + c n(v).
struct HForm {
    Rat a;
    Quat b;
    Rat c;
};

inline bool operator==(const HForm& f, const HForm& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c;
}
inline bool operator!=(const HForm& f, const HForm& g) { return !(f == g); }

inline Rat f_eval(const HForm& f, const Quat& u, const Quat& v) {
    return f.a * nrd(u) + trd(conj(u) * f.b * v) + f.c * nrd(v);
}

inline Rat disc(const HForm& f) { return nrd(f.b) - f.a * f.c; }

inline Mat2 mat_of_form(const HForm& f) {
    return {quat_scalar(f.b.alg, f.a), f.b, conj(f.b), quat_scalar(f.b.alg, f.c)};
}

inline bool is_integral(const OrderCtx& o, const HForm& f) {
    return rat_den(f.a) == 1 && rat_den(f.c) == 1 && o.contains(f.b);
}

// right action f o g, via M(f o g) = g* M(f) g
inline HForm act(const HForm& f, const Mat2& g) {
    Mat2 n = adjoint(g) * mat_of_form(f) * g;
    if (!n.a.is_rational() || !n.d.is_rational() || n.c != conj(n.b))
        throw invariant_violation("form action produced a non-Hermitian matrix");
    return {n.a.c[0], n.b, n.d.c[0]};
}

// symmetric bilinear pairing with <f, f> = -2 disc(f)
inline Rat pairing(const HForm& f, const HForm& g) {
    return f.a * g.c + f.c * g.a - trd(conj(f.b) * g.b);
}

// r * Theta(z, r): the positive definite form ((1, -z), (-conj z, n(z)+r^2)),
// kept rational by the r-scaling.  Its discriminant is -r^2.
inline HForm theta_scaled(const UHPoint& x) {
    return {1, -x.z, nrd(x.z) + x.rsq};
}

// degenerate form attached to a cusp: matrix (1/n(I_a)) ((1, -a), (-conj a, n(a)))
inline HForm f_of_cusp(const Cusp& c) {
    const AlgebraSpec* alg = c.order->alg;
    if (c.infinite) return {0, quat_zero(alg), 1};
    Rat s = 1 / c.nI;
    return {s, -(s * c.alpha), s * nrd(c.alpha)};
}

// f evaluated through the coprime representative; for integral f this is the
// integer f(x, y) with n(O x + O y) = 1
inline Rat f_over_cusp(const HForm& f, const Cusp& c) { return f_eval(f, c.rep_x, c.rep_y); }

inline Rat F_value(const OrderCtx& o, const HForm& f, const Cusp& c) {
    if (!is_integral(o, f)) throw usage_error("F_value requires an integral form");
    return f_over_cusp(f, c);
}

enum class Sign { Neg = -1, Zero = 0, Pos = 1 };

inline Sign sign_of(const OrderCtx& o, const HForm& f, const Cusp& c) {
    Rat v = F_value(o, f, c);
    return v == 0 ? Sign::Zero : (v > 0 ? Sign::Pos : Sign::Neg);
}

// projective zero set of an indefinite form: a 3-sphere when a != 0, otherwise
// an affine hyperplane together with infinity
struct ZeroLocus {
    enum Kind { Sphere, PlanePlusInfinity } kind;
    Quat center_or_normal;
    Rat radius_sq_or_offset; // radius^2, or the plane offset -c
};

inline ZeroLocus zero_locus(const HForm& f) {
    if (disc(f) <= 0) throw usage_error("zero_locus requires an indefinite form");
    if (f.a != 0)
        return {ZeroLocus::Sphere, -(Rat(1) / f.a) * f.b, disc(f) / (f.a * f.a)};
    return {ZeroLocus::PlanePlusInfinity, f.b, -f.c};
}

inline bool on_zero_locus(const ZeroLocus& zl, const std::optional<Quat>& z) {
    if (zl.kind == ZeroLocus::Sphere)
        return z.has_value() && nrd(*z - zl.center_or_normal) == zl.radius_sq_or_offset;
    if (!z.has_value()) return true;
    return trd(conj(*z) * zl.center_or_normal) == zl.radius_sq_or_offset;
}

// side of the zero locus, matching the sign of F on cusps off the locus
inline int locus_side(const HForm& f, const std::optional<Quat>& z) {
    Rat v = z.has_value() ? f_eval(f, *z, quat_one(f.b.alg)) : f.a;
    return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

// Unique form with prescribed F-values at six cusps in general position.
// Assembles the 6x6 rational system in (a, b0..b3, c); a singular system means
// the cusps lie on a common projective real hyperplane.
inline HForm reconstruct(const OrderCtx& o,
                         const std::vector<std::pair<Cusp, Rat>>& samples) {
    if (samples.size() != 6) throw usage_error("reconstruct needs exactly six samples");
    detail::RMat m(6, detail::RVec(6, 0));
    detail::RVec rhs(6);
    for (size_t i = 0; i < 6; ++i) {
        const Cusp& c = samples[i].first;
        const Quat& x = c.rep_x;
        const Quat& y = c.rep_y;
        m[i][0] = nrd(x);
        for (int k = 0; k < 4; ++k)
            m[i][1 + k] = trd(conj(x) * quat_basis(o.alg, k) * y);
        m[i][5] = nrd(y);
        rhs[i] = samples[i].second; // n(O x + O y) = 1 for coprime representatives
    }
    auto sol = detail::rmat_solve(m, rhs);
    if (!sol)
        throw degenerate_configuration(
            "sample cusps lie on a common projective real hyperplane");
    return {(*sol)[0], Quat(o.alg, (*sol)[1], (*sol)[2], (*sol)[3], (*sol)[4]), (*sol)[5]};
}

} // namespace ww
