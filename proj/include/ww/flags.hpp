#pragma once

#include "ww/hform.hpp"

namespace ww {

// Rank-one right O-submodule L = (a, b) (O a + O b)^{-1} of O x O with
// torsion-free quotient.  Canonicalized by the 4x8 row HNF of its basis over
// the doubled order basis, so flag equality is structural.
struct Flag {
    std::array<std::pair<Quat, Quat>, 4> basis;
    detail::IMat hnf; // 4 x 8, integer coordinates over (order basis, order basis)
    const OrderCtx* order = nullptr;
};

inline bool operator==(const Flag& f, const Flag& g) {
    return f.order == g.order && f.hnf == g.hnf;
}
inline bool operator!=(const Flag& f, const Flag& g) { return !(f == g); }

namespace detail {

inline Flag flag_from_pairs(const OrderCtx& o, std::vector<std::pair<Quat, Quat>> pairs) {
    IMat rows;
    for (const auto& [u, v] : pairs) {
        IRow r(8);
        auto cu = o.to_coords(u);
        auto cv = o.to_coords(v);
        for (int j = 0; j < 4; ++j) {
            if (rat_den(cu[j]) != 1 || rat_den(cv[j]) != 1)
                throw invariant_violation("flag basis pair outside O x O");
            r[j] = rat_num(cu[j]);
            r[4 + j] = rat_num(cv[j]);
        }
        rows.push_back(std::move(r));
    }
    if (hnf_rows(rows) != 4) throw invariant_violation("flag lattice is not of rank 4");
    rows.resize(4);
    Flag flag;
    flag.order = &o;
    flag.hnf = rows;
    for (int i = 0; i < 4; ++i) {
        std::array<Rat, 4> cu{}, cv{};
        for (int j = 0; j < 4; ++j) {
            cu[j] = Rat(rows[i][j]);
            cv[j] = Rat(rows[i][4 + j]);
        }
        flag.basis[i] = {o.from_coords(cu), o.from_coords(cv)};
    }
    return flag;
}

} // namespace detail

// Flag of [x : y]: basis pairs (x m_i, y m_i) over a Z-basis {m_i} of
// (O x + O y)^{-1}.  Independent of the representative pair.
inline Flag flag_of_pair(const OrderCtx& o, const Quat& x, const Quat& y) {
    if (x.is_zero() && y.is_zero()) throw usage_error("flag of the zero pair");
    IdealLat inv = ideal_inverse_two_gen(o, x, y);
    std::vector<std::pair<Quat, Quat>> pairs;
    for (int i = 0; i < 4; ++i) {
        Quat m = inv.row_quat(i);
        pairs.emplace_back(x * m, y * m);
    }
    return detail::flag_from_pairs(o, pairs);
}

inline Flag flag_of(const OrderCtx& o, const Cusp& c) {
    return flag_of_pair(o, c.rep_x, c.rep_y);
}

// image of a flag under the linear action of g
inline Flag flag_apply(const OrderCtx& o, const Mat2& g, const Flag& f) {
    std::vector<std::pair<Quat, Quat>> pairs;
    for (const auto& [u, v] : f.basis) pairs.push_back(apply(g, u, v));
    return detail::flag_from_pairs(o, pairs);
}

// scalar product induced on A x A by a Hamiltonian form
inline Rat form_inner(const HForm& f, const std::pair<Quat, Quat>& z,
                      const std::pair<Quat, Quat>& w) {
    return (f_eval(f, z.first + w.first, z.second + w.second) -
            f_eval(f, z.first, z.second) - f_eval(f, w.first, w.second)) /
           2;
}

// Gram determinant of the flag basis under the scaled form r Theta(x); equals
// r^4 times the squared covolume of the flag for Theta(x).
inline Rat covol_sq_scaled(const UHPoint& x, const Flag& flag) {
    HForm f = theta_scaled(x);
    detail::RMat g(4, detail::RVec(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g[i][j] = form_inner(f, flag.basis[i], flag.basis[j]);
    return detail::rmat_det(g);
}

// det(tr(conj(b_i) b_j)) over the order basis; equals D_A^2
inline Rat gram_det_order(const OrderCtx& o) {
    detail::RMat g(4, detail::RVec(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g[i][j] = trd(conj(o.basis[i]) * o.basis[j]);
    return detail::rmat_det(g);
}

struct A3Report {
    bool ok = false;
    Rat lhs;        // R^4
    Rat via_gram;   // (16 / D_A^2) * covol_sq_scaled
    Rat via_closed; // same quantity from the closed covolume formula
};

// Distance-covolume identity: R^4 = (16 / D_A^2) * det Gram, cross-checked
// against covol = (D_A / 4) f(a, b)^2 / n(O a + O b)^2 for f = r Theta(x).
inline A3Report verify_a3(const OrderCtx& o, const UHPoint& x, const Cusp& c) {
    A3Report rep;
    Rat dist = dist_scaled(x, c);
    rep.lhs = dist * dist * dist * dist;
    Rat dsq = Rat(o.alg->disc) * Rat(o.alg->disc);
    rep.via_gram = Rat(16) / dsq * covol_sq_scaled(x, flag_of(o, c));
    Rat fab = f_eval(theta_scaled(x), c.rep_x, c.rep_y); // n(O rep_x + O rep_y) = 1
    Rat covol = Rat(o.alg->disc, 4) * fab * fab;
    rep.via_closed = Rat(16) / dsq * covol * covol;
    rep.ok = rep.lhs == rep.via_gram && rep.lhs == rep.via_closed;
    return rep;
}

} // namespace ww
