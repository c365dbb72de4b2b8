#pragma once

#include "ww/reference_data.hpp"
#include "ww/waterworld.hpp"

// Exact slice data behind the 2D figures: horoball circles in the horizontal
// plane through the fundamental vertex, equidistant curves restricted to the
// (1, I) coordinate plane, and the table of F-values around the fundamental
// cell.
namespace ww {

struct SliceCircle {
    Cusp cusp;
    Rat radius_sq; // horizontal radius^2 of B_a(sqrt D) cut at the vertex height
};

// The level-sqrt(D_A) horoball at a meets the plane r^2 = 1/D_A in a ball of
// radius^2 n(I_a) - 1/D_A; radius 0 marks horoballs touching the plane.
inline std::vector<SliceCircle> horoball_slice(const OrderCtx& o, const Region& region) {
    std::vector<SliceCircle> out;
    Rat level(1, o.alg->disc);
    for (const Cusp& c : region_cusps(o, region)) {
        if (c.infinite) continue;
        Rat rsq = c.nI - level;
        if (rsq >= 0) out.push_back({c, rsq});
    }
    return out;
}

struct SliceCurve {
    enum Kind { Line, Conic } kind;
    Cusp a, b;
    // Line: l0 x + l1 y = l2.  Conic: w0 (x - c0)^2 + w1 (y - c1)^2 = rsq,
    // where (x, y) are coordinates along (1, I).
    Rat l0, l1, l2;
    Rat c0, c1, w0, w1, rsq;
};

// Equidistant surfaces between the cusps incident to the fundamental vertex,
// restricted to the (1, I) coordinate plane of the boundary.
inline std::vector<SliceCurve> link_slice(const OrderCtx& o) {
    std::vector<SliceCurve> out;
    CuspSet link =
        cusps_at(o, {ref::fundamental_vertex(o), Rat(o.alg->disc), CuspQuery::Boundary});
    for (size_t i = 0; i < link.size(); ++i)
        for (size_t j = i + 1; j < link.size(); ++j) {
            SurfaceDescr s = equidistant_surface(link[i], link[j]);
            SliceCurve row{};
            row.a = link[i];
            row.b = link[j];
            if (s.kind == SurfaceDescr::VerticalPlane) {
                Quat u = s.normal_or_center;
                row.kind = SliceCurve::Line;
                row.l0 = trd(conj(u));
                row.l1 = trd(conj(u) * quat_basis(o.alg, 1));
                row.l2 = s.offset_or_radius_sq;
                if (row.l0 == 0 && row.l1 == 0) continue; // plane misses the slice
            } else {
                const Quat& w = s.normal_or_center;
                row.kind = SliceCurve::Conic;
                row.c0 = w.c[0];
                row.c1 = w.c[1];
                row.w0 = 1;
                row.w1 = -o.alg->sc_i;
                row.rsq = s.offset_or_radius_sq + o.alg->sc_j * w.c[2] * w.c[2] -
                          o.alg->sc_i * o.alg->sc_j * w.c[3] * w.c[3];
                if (row.rsq <= 0) continue; // hemisphere misses the slice plane
            }
            out.push_back(row);
        }
    return out;
}

struct ValueRow {
    std::string label;
    Cusp cusp;
    Rat value;
};

// F on the cells around the fundamental cell: infinity, zero, and the unit
// translates; the values are a, c and a + tr(conj(u) b) + c.
inline std::vector<ValueRow> cell_values(const OrderCtx& o, const HForm& f) {
    std::vector<ValueRow> out;
    out.push_back({"inf", cusp_infinity(o), F_value(o, f, cusp_infinity(o))});
    Cusp zero = cusp_of(o, quat_zero(o.alg));
    out.push_back({"0", zero, F_value(o, f, zero)});
    for (const Quat& u : o.units) {
        Cusp cu = cusp_of(o, u);
        out.push_back({quat_str(u), cu, F_value(o, f, cu)});
    }
    return out;
}

} // namespace ww
