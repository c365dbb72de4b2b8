#pragma once

#include <cmath>
#include <iomanip>
#include <sstream>

#include "ww/hform.hpp"

namespace ww {

// Normalized horoball B_a(s), stored through s^2.  For finite a it is the
// euclidean ball of diameter s * n(I_a) tangent at a; for infinity the
// halfspace r >= 1/s.
struct Horoball {
    Cusp cusp;
    Rat ssq;
};

// R_a(x) = r * d_a(x): (n(z - a) + r^2) / n(I_a) for finite a, and 1 at
// infinity.  All distance comparisons reduce to rational inequalities in R^2.
inline Rat dist_scaled(const UHPoint& x, const Cusp& a) {
    if (a.infinite) return 1;
    return (nrd(x.z - a.alpha) + x.rsq) / a.nI;
}

enum class BallPosition { Interior, Boundary, Outside };

inline BallPosition horoball_test(const UHPoint& x, const Horoball& h) {
    Rat lhs = dist_scaled(x, h.cusp);
    lhs *= lhs;
    Rat rhs = h.ssq * x.rsq;
    if (lhs < rhs) return BallPosition::Interior;
    if (lhs == rhs) return BallPosition::Boundary;
    return BallPosition::Outside;
}

// exp of the hyperbolic distance between the unit horoballs at a and b:
// n(a - b) / n(I_a I_b) for finite cusps, 1 / n(I_b) against infinity
inline Rat horoball_gap(const Cusp& a, const Cusp& b) {
    if (a == b) throw usage_error("horoball_gap of equal cusps");
    Rat gap;
    if (a.infinite || b.infinite)
        gap = 1 / (a.infinite ? b.nI : a.nI);
    else
        gap = nrd(a.alpha - b.alpha) / (a.nI * b.nI);
    if (gap < 1)
        throw invariant_violation("horoball gap below 1 between " + cusp_str(a) + " and " +
                                  cusp_str(b));
    return gap;
}

enum class Tangency { TangentB1, PointContactAtD, Separated };

// The single common point of the level-s^2 horoballs at a and b, defined when
// gap(a, b) = s^2.  Lies on the segment of euclidean centers; everything stays
// rational because the heights enter squared.
inline UHPoint tangency_point(const Cusp& a, const Cusp& b, const Rat& ssq) {
    if (a.infinite || b.infinite) {
        const Cusp& f = a.infinite ? b : a;
        return {f.alpha, 1 / ssq};
    }
    Rat t = a.nI / (a.nI + b.nI);
    Quat z = a.alpha + t * (b.alpha - a.alpha);
    Rat h = a.nI * b.nI / (a.nI + b.nI);
    return {z, ssq * h * h};
}

// gap = 1 means the unit horoballs are tangent; gap = D_A means the
// sqrt(D_A)-horoballs meet in a single point.  Both cases are re-checked by
// computing the touching point exactly and testing it against both balls.
inline Tangency tangency(const Cusp& a, const Cusp& b) {
    Rat gap = horoball_gap(a, b);
    Rat dsq(a.order->alg->disc);
    if (gap != 1 && gap != dsq) return Tangency::Separated;
    UHPoint touch = tangency_point(a, b, gap);
    if (horoball_test(touch, {a, gap}) != BallPosition::Boundary ||
        horoball_test(touch, {b, gap}) != BallPosition::Boundary)
        throw invariant_violation("horoball pair at critical gap without a common point");
    return gap == 1 ? Tangency::TangentB1 : Tangency::PointContactAtD;
}

// The principal-product identity I_a I_b = O(a - b).  It certifies tangency
// whenever it holds; the converse needs the reduced norm to be multiplicative
// on the (possibly incompatible) product, which can fail, so tangency() itself
// decides by the gap.
inline bool tangency_ideal_identity(const Cusp& a, const Cusp& b) {
    if (a == b) throw usage_error("tangency_ideal_identity of equal cusps");
    if (a.infinite || b.infinite) return (a.infinite ? b.nI : a.nI) == 1;
    return ideal_product(a.ideal, b.ideal) == principal_ideal(*a.order, a.alpha - b.alpha);
}

// hyperplane of points equidistant (in the normalized distance) from two cusps
struct SurfaceDescr {
    enum Kind { VerticalPlane, Hemisphere } kind;
    Quat normal_or_center;
    Rat offset_or_radius_sq; // plane: tr(conj(u) z) = offset; hemisphere: n(z-c)+r^2 = radius^2
};

inline SurfaceDescr equidistant_surface(const Cusp& a, const Cusp& b) {
    if (a == b) throw usage_error("equidistant_surface of equal cusps");
    if (a.infinite || b.infinite) {
        const Cusp& f = a.infinite ? b : a;
        return {SurfaceDescr::Hemisphere, f.alpha, f.nI};
    }
    if (a.nI == b.nI) {
        Quat u = a.alpha - b.alpha;
        return {SurfaceDescr::VerticalPlane, u, nrd(a.alpha) - nrd(b.alpha)};
    }
    Rat p = 1 / a.nI, q = 1 / b.nI;
    Quat w = (Rat(1) / (p - q)) * (p * a.alpha - q * b.alpha);
    Rat radius_sq = nrd(w) - (p * nrd(a.alpha) - q * nrd(b.alpha)) / (p - q);
    if (radius_sq <= 0)
        throw invariant_violation("degenerate equidistant hemisphere");
    return {SurfaceDescr::Hemisphere, w, radius_sq};
}

inline bool on_surface(const SurfaceDescr& s, const UHPoint& x) {
    if (s.kind == SurfaceDescr::VerticalPlane)
        return trd(conj(s.normal_or_center) * x.z) == s.offset_or_radius_sq;
    return nrd(x.z - s.normal_or_center) + x.rsq == s.offset_or_radius_sq;
}

// exp of the Busemann normalization constant: (n(a) + 1) / n(I_a), 1 at infinity
inline Rat busemann_offset(const Cusp& a) {
    if (a.infinite) return 1;
    return (nrd(a.alpha) + 1) / a.nI;
}

// human-readable distance d_a(x) = sqrt(R^2 / r^2), exact radicand plus an
// approximation; the exact value itself never leaves the rational world
inline std::string dist_str(const UHPoint& x, const Cusp& a, int digits = 6) {
    Rat r = dist_scaled(x, a);
    Rat dsq = r * r / x.rsq;
    std::ostringstream os;
    os << "sqrt(" << rat_str(dsq) << ") ~ " << std::setprecision(digits)
       << std::sqrt(to_double(dsq));
    return os.str();
}

} // namespace ww
