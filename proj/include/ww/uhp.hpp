#pragma once

#include "ww/mat2.hpp"

namespace ww {

// Point (z, r) of the upper halfspace model, stored as z and r^2 so that all
// derived quantities stay rational.
struct UHPoint {
    Quat z;
    Rat rsq;

    UHPoint(Quat z_, Rat rsq_) : z(std::move(z_)), rsq(std::move(rsq_)) {
        if (rsq <= 0) throw usage_error("UHPoint requires r^2 > 0");
    }
};

inline bool operator==(const UHPoint& x, const UHPoint& y) {
    return x.z == y.z && x.rsq == y.rsq;
}
inline bool operator!=(const UHPoint& x, const UHPoint& y) { return !(x == y); }

// Isometric action of GL_2; the r^2 scaling carries the det2sq factor so that
// the formula restricts to the usual one on SL_2.
inline UHPoint isometry_gl(const Mat2& g, const UHPoint& x) {
    Rat dsq = det2sq(g);
    if (dsq == 0) throw usage_error("isometry_gl: singular matrix");
    Quat czd = g.c * x.z + g.d;
    Rat denom = nrd(czd) + x.rsq * nrd(g.c);
    Quat znum = (g.a * x.z + g.b) * conj(czd) + x.rsq * (g.a * conj(g.c));
    return UHPoint(znum / denom, dsq * x.rsq / (denom * denom));
}

inline UHPoint isometry(const Mat2& g, const UHPoint& x) {
    if (det2sq(g) != 1) throw usage_error("isometry requires det2sq(g) = 1");
    return isometry_gl(g, x);
}

} // namespace ww
