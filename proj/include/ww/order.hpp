#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ww/qenum.hpp"
#include "ww/qlin.hpp"
#include "ww/quat.hpp"

namespace ww {

// A maximal order given by a Z-basis.  Construction checks the ring axioms
// exactly and enumerates the unit group.
struct OrderCtx {
    const AlgebraSpec* alg = nullptr;
    std::array<Quat, 4> basis;
    detail::QMat4 basis_mat{};     // rows = basis coordinates in the algebra basis
    detail::QMat4 inv_basis_mat{}; // algebra coordinates -> order coordinates
    detail::QMat4 gram{};          // gram[i][j] = trd(conj(b_i) b_j) / 2
    std::vector<Quat> units;       // all elements of reduced norm 1, sorted
    std::string name;

    std::array<Rat, 4> to_coords(const Quat& x) const {
        std::array<Rat, 4> out{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out[i] += x.c[j] * inv_basis_mat[j][i];
        return out;
    }

    Quat from_coords(const std::array<Rat, 4>& k) const {
        Quat out = quat_zero(alg);
        for (int i = 0; i < 4; ++i) out = out + k[i] * basis[i];
        return out;
    }

    Quat from_int_coords(const std::array<Int, 4>& k) const {
        Quat out = quat_zero(alg);
        for (int i = 0; i < 4; ++i) out = out + Rat(k[i]) * basis[i];
        return out;
    }

    bool contains(const Quat& x) const {
        if (x.alg != alg) return false;
        for (const Rat& v : to_coords(x))
            if (rat_den(v) != 1) return false;
        return true;
    }

    bool is_unit(const Quat& x) const { return contains(x) && nrd(x) == 1; }
};

namespace detail {

inline void validate_order(OrderCtx& o) {
    for (const auto& b : o.basis)
        if (b.alg != o.alg) throw usage_error("order basis from a different algebra");
    if (!o.contains(quat_one(o.alg))) throw invariant_violation("order must contain 1");
    for (int i = 0; i < 4; ++i) {
        if (rat_den(nrd(o.basis[i])) != 1 || rat_den(trd(o.basis[i])) != 1)
            throw invariant_violation("reduced norm/trace not integral on order basis");
        if (!o.contains(conj(o.basis[i])))
            throw invariant_violation("order not closed under conjugation");
        for (int j = 0; j < 4; ++j) {
            if (!o.contains(o.basis[i] * o.basis[j]))
                throw invariant_violation("order basis not closed under multiplication");
            if (rat_den(trd(conj(o.basis[i]) * o.basis[j])) != 1)
                throw invariant_violation("trace pairing not integral on order basis");
        }
    }
}

} // namespace detail

// All w in the order with nrd(w - center) <= bound, sorted by coordinates.
inline std::vector<Quat> order_ball(const OrderCtx& o, const Quat& center, const Rat& bound) {
    auto t = o.to_coords(center);
    std::vector<Quat> out;
    for (const auto& k : detail::enum_qform(o.gram, t, bound)) out.push_back(o.from_int_coords(k));
    std::sort(out.begin(), out.end());
    return out;
}

inline OrderCtx make_order(const AlgebraSpec* alg, std::array<Quat, 4> basis, std::string name) {
    OrderCtx o;
    o.alg = alg;
    o.basis = std::move(basis);
    o.name = std::move(name);
    detail::RMat bm(4, detail::RVec(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) bm[i][j] = o.basis[i].c[j];
    detail::RMat inv = detail::rmat_inverse(bm); // throws when the basis is degenerate
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            o.basis_mat[i][j] = bm[i][j];
            o.inv_basis_mat[i][j] = inv[i][j];
            o.gram[i][j] = trd(conj(o.basis[i]) * o.basis[j]) / 2;
        }
    detail::validate_order(o);
    for (const Quat& u : order_ball(o, quat_zero(alg), 1))
        if (nrd(u) == 1) o.units.push_back(u);
    if (o.units.size() < 2) throw invariant_violation("unit enumeration failed");
    return o;
}

inline const OrderCtx& order_preset(std::string_view name) {
    static const OrderCtx hurwitz = [] {
        const AlgebraSpec* a = algebra_preset("hurwitz");
        return make_order(a,
                          {quat_one(a), quat_basis(a, 1), quat_basis(a, 2),
                           Quat(a, Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2))},
                          "hurwitz");
    }();
    static const OrderCtx da3 = [] {
        const AlgebraSpec* a = algebra_preset("da3");
        return make_order(a,
                          {quat_one(a), Quat(a, Rat(1, 2), Rat(1, 2), 0, 0), quat_basis(a, 2),
                           Quat(a, 0, 0, Rat(1, 2), Rat(1, 2))},
                          "da3");
    }();
    if (name == "hurwitz") return hurwitz;
    if (name == "da3") return da3;
    throw usage_error("unknown order preset: " + std::string(name));
}

// Closest-vector step of the left-Euclidean division: some c in the order with
// nrd(alpha - c) < 1.  Coordinate rounding plus an exact offset search; the
// window widens once before giving up.
inline Quat euclid_divide(const OrderCtx& o, const Quat& alpha) {
    auto t = o.to_coords(alpha);
    std::array<Int, 4> base{};
    for (int i = 0; i < 4; ++i) base[i] = round_half_up(t[i]);
    Quat best = quat_zero(o.alg);
    Rat best_n(-1);
    auto search = [&](Int radius) {
        std::array<Int, 4> off{};
        for (off[0] = -radius; off[0] <= radius; ++off[0])
            for (off[1] = -radius; off[1] <= radius; ++off[1])
                for (off[2] = -radius; off[2] <= radius; ++off[2])
                    for (off[3] = -radius; off[3] <= radius; ++off[3]) {
                        std::array<Int, 4> k{};
                        for (int i = 0; i < 4; ++i) k[i] = base[i] + off[i];
                        Quat c = o.from_int_coords(k);
                        Rat n = nrd(alpha - c);
                        if (best_n < 0 || n < best_n || (n == best_n && c < best)) {
                            best_n = n;
                            best = c;
                        }
                    }
    };
    search(1);
    if (best_n >= 1) search(2);
    if (best_n >= 1)
        throw invariant_violation("euclid_divide: no order element within norm 1 of " +
                                  quat_str(alpha));
    return best;
}

} // namespace ww
