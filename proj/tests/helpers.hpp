#pragma once

#include <random>
#include <vector>

#include "ww/all.hpp"
#include "ww/random.hpp"
#include "ww/reference_data.hpp"

namespace tt {

using Rng = ww::rnd::Engine;

inline ww::Int rand_int(Rng& rng, int lo, int hi) { return ww::rnd::uniform_int(rng, lo, hi); }
inline ww::Rat rand_rat(Rng& rng, int nr, int dr) { return ww::rnd::rat(rng, nr, dr); }
inline ww::Quat rand_quat(Rng& rng, const ww::AlgebraSpec* a, int nr, int dr) {
    return ww::rnd::quat(rng, a, nr, dr);
}
inline ww::Quat rand_order_elt(Rng& rng, const ww::OrderCtx& o, int r) {
    return ww::rnd::order_elt(rng, o, r);
}
inline ww::Quat rand_unit(Rng& rng, const ww::OrderCtx& o) { return ww::rnd::unit(rng, o); }
inline ww::Mat2 rand_sl2o(Rng& rng, const ww::OrderCtx& o, int len) {
    return ww::rnd::sl2_order(rng, o, len);
}
inline ww::Mat2 rand_sl2a(Rng& rng, const ww::OrderCtx& o, int len) {
    return ww::rnd::sl2_algebra(rng, o, len);
}
inline ww::UHPoint rand_point(Rng& rng, const ww::AlgebraSpec* a, int nr, int dr) {
    return ww::rnd::point(rng, a, nr, dr);
}
inline ww::HForm rand_integral_indefinite(Rng& rng, const ww::OrderCtx& o, int r) {
    return ww::rnd::integral_indefinite(rng, o, r);
}
inline ww::Cusp rand_cusp(Rng& rng, const ww::OrderCtx& o, int r, bool allow_inf = true) {
    return ww::rnd::cusp(rng, o, r, allow_inf);
}

// ---- named elements used across the example-based tests ----

inline const ww::OrderCtx& H() { return ww::order_preset("hurwitz"); }
inline const ww::OrderCtx& D3() { return ww::order_preset("da3"); }

inline ww::Quat hq(ww::Rat a, ww::Rat b, ww::Rat c, ww::Rat d) {
    return {H().alg, std::move(a), std::move(b), std::move(c), std::move(d)};
}
inline ww::Quat dq(ww::Rat a, ww::Rat b, ww::Rat c, ww::Rat d) {
    return {D3().alg, std::move(a), std::move(b), std::move(c), std::move(d)};
}

inline ww::Quat omega() { return hq({1, 2}, {1, 2}, {1, 2}, {1, 2}); } // (1+i+j+k)/2
inline ww::Quat rho() { return dq({1, 2}, {1, 2}, 0, 0); }             // (1+I)/2
inline ww::Quat rho_j() { return dq(0, 0, {1, 2}, {1, 2}); }           // rho * J
inline ww::Quat z0() { return ww::ref::fundamental_vertex(D3()).z; }

inline ww::UHPoint v0_hurwitz() { return ww::ref::fundamental_vertex(H()); }
inline ww::UHPoint v0_da3() { return ww::ref::fundamental_vertex(D3()); }

// mixed integer combo p0 + p1*rho + p2*J + p3*rho*J of the da3 order basis
inline ww::Quat dord(int p0, int p1, int p2, int p3) {
    return D3().from_int_coords({p0, p1, p2, p3});
}

inline std::vector<std::optional<ww::Quat>> E_set() {
    return ww::ref::link_cusp_values(H());
}
inline std::vector<ww::Quat> V33() { return ww::ref::duoprism_vertices(D3()); }
inline std::vector<ww::Quat> gV33() { return ww::ref::inverted_duoprism_vertices(D3()); }

// table-driven matrix of order-basis integer combinations
inline ww::Mat2 dmat(std::array<std::array<int, 4>, 4> rows) {
    return {dord(rows[0][0], rows[0][1], rows[0][2], rows[0][3]),
            dord(rows[1][0], rows[1][1], rows[1][2], rows[1][3]),
            dord(rows[2][0], rows[2][1], rows[2][2], rows[2][3]),
            dord(rows[3][0], rows[3][1], rows[3][2], rows[3][3])};
}

inline ww::Mat2 vertex_inversion() { return ww::ref::vertex_inversion(D3()); }
inline ww::Mat2 g_inf_1() { return ww::ref::grid_gen_1(D3()); }
inline ww::Mat2 g_inf_2() { return ww::ref::grid_gen_2(D3()); }
inline ww::Mat2 h_inf() { return ww::ref::flip_gen(D3()); }
inline ww::Mat2 g_rho() { return ww::ref::corner_gen(D3()); }

} // namespace tt
