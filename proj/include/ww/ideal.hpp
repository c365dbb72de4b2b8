#pragma once

#include <algorithm>
#include <vector>

#include "ww/hnf.hpp"
#include "ww/order.hpp"

namespace ww {

// Full-rank Z-lattice in the algebra, stored as (1/denom) * rowspan(hnf) where
// the hnf rows are coordinates in the order basis.  Canonical: denom minimal,
// hnf in row Hermite normal form.  Represents (fractional) one-sided ideals.
struct IdealLat {
    Int denom = 1;
    std::array<std::array<Int, 4>, 4> hnf{};
    const OrderCtx* order = nullptr;

    Quat row_quat(int i) const {
        std::array<Rat, 4> k;
        for (int j = 0; j < 4; ++j) k[j] = Rat(hnf[i][j], denom);
        return order->from_coords(k);
    }
};

inline bool operator==(const IdealLat& a, const IdealLat& b) {
    return a.order == b.order && a.denom == b.denom && a.hnf == b.hnf;
}
inline bool operator!=(const IdealLat& a, const IdealLat& b) { return !(a == b); }

namespace detail {

inline IdealLat lattice_from_generators(const OrderCtx& o, const std::vector<Quat>& gens) {
    Int denom = 1;
    std::vector<std::array<Rat, 4>> coords;
    coords.reserve(gens.size());
    for (const Quat& g : gens) {
        coords.push_back(o.to_coords(g));
        for (const Rat& v : coords.back()) denom = lcm(denom, rat_den(v));
    }
    IMat rows;
    rows.reserve(coords.size());
    for (const auto& k : coords) {
        IRow r(4);
        for (int j = 0; j < 4; ++j) r[j] = rat_num(k[j] * Rat(denom));
        rows.push_back(std::move(r));
    }
    size_t rank = hnf_rows(rows);
    if (rank != 4) throw usage_error("lattice generators do not have full rank");
    Int g = gcd(content(IMat(rows.begin(), rows.begin() + 4)), denom);
    IdealLat lat;
    lat.order = &o;
    lat.denom = denom / g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) lat.hnf[i][j] = rows[i][j] / g;
    return lat;
}

} // namespace detail

inline bool lattice_contains(const IdealLat& lat, const Quat& x) {
    auto k = lat.order->to_coords(x);
    std::array<Int, 4> v;
    for (int j = 0; j < 4; ++j) {
        Rat s = k[j] * Rat(lat.denom);
        if (rat_den(s) != 1) return false;
        v[j] = rat_num(s);
    }
    // back-substitution against the upper triangular HNF
    for (int i = 3; i >= 0; --i) {
        if (v[i] % lat.hnf[i][i] != 0) return false;
        Int q = v[i] / lat.hnf[i][i];
        for (int j = 0; j <= i; ++j) v[j] -= q * lat.hnf[i][j];
    }
    return v == std::array<Int, 4>{};
}

// principal left ideal O*x
inline IdealLat principal_ideal(const OrderCtx& o, const Quat& x) {
    if (x.is_zero()) throw usage_error("principal_ideal of zero");
    std::vector<Quat> gens;
    for (const Quat& b : o.basis) gens.push_back(b * x);
    return detail::lattice_from_generators(o, gens);
}

// O*x + O*y; one zero argument degrades to the principal ideal on the other
inline IdealLat two_gen_ideal(const OrderCtx& o, const Quat& x, const Quat& y) {
    if (x.is_zero() && y.is_zero()) throw usage_error("two_gen_ideal of (0, 0)");
    if (x.is_zero()) return principal_ideal(o, y);
    if (y.is_zero()) return principal_ideal(o, x);
    std::vector<Quat> gens;
    for (const Quat& b : o.basis) {
        gens.push_back(b * x);
        gens.push_back(b * y);
    }
    return detail::lattice_from_generators(o, gens);
}

// Reduced norm via the index: for integral m, n(m) = [O : m]^{1/2}; extended
// multiplicatively to fractional lattices by the denominator.  A non-square
// index means the lattice is not an ideal.
inline Rat reduced_norm(const IdealLat& m) {
    Int index = 1;
    for (int i = 0; i < 4; ++i) index *= m.hnf[i][i];
    Int root;
    if (!is_perfect_square(index, &root))
        throw invariant_violation("lattice index is not a perfect square");
    return Rat(root, m.denom * m.denom);
}

inline IdealLat ideal_product(const IdealLat& m1, const IdealLat& m2) {
    if (m1.order != m2.order) throw usage_error("ideal_product: different orders");
    std::vector<Quat> gens;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) gens.push_back(m1.row_quat(i) * m2.row_quat(j));
    return detail::lattice_from_generators(*m1.order, gens);
}

inline IdealLat lattice_intersect(const IdealLat& a, const IdealLat& b) {
    if (a.order != b.order) throw usage_error("lattice_intersect: different orders");
    // common denominator, then integer kernel of the stacked generator matrix
    Int d = lcm(a.denom, b.denom);
    detail::IMat stacked(8, detail::IRow(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            stacked[i][j] = a.hnf[i][j] * (d / a.denom);
            stacked[4 + i][j] = b.hnf[i][j] * (d / b.denom);
        }
    detail::IMat ker = detail::left_kernel(stacked);
    if (ker.size() != 4) throw invariant_violation("lattice_intersect: unexpected kernel rank");
    std::vector<Quat> gens;
    for (const auto& u : ker) {
        std::array<Rat, 4> k{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) k[j] += Rat(u[i] * stacked[i][j], d);
        gens.push_back(a.order->from_coords(k));
    }
    return detail::lattice_from_generators(*a.order, gens);
}

// (O*a + O*b)^{-1} = a^{-1} O  intersect  b^{-1} O, with the evident
// degenerate cases when a or b vanishes.  Accepts fractional a, b.
inline IdealLat ideal_inverse_two_gen(const OrderCtx& o, const Quat& a, const Quat& b) {
    if (a.is_zero() && b.is_zero()) throw usage_error("ideal inverse of the zero module");
    auto inv_principal = [&](const Quat& x) {
        std::vector<Quat> gens;
        for (const Quat& e : o.basis) gens.push_back(inverse(x) * e);
        return detail::lattice_from_generators(o, gens);
    };
    if (a.is_zero()) return inv_principal(b);
    if (b.is_zero()) return inv_principal(a);
    return lattice_intersect(inv_principal(a), inv_principal(b));
}

// right order O_r(L) = { x in A : L x <= L }, the intersection of the lattices
// v^{-1} L over a basis {v} of L
inline IdealLat right_order(const IdealLat& L) {
    IdealLat acc;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        Quat vi_inv = inverse(L.row_quat(i));
        std::vector<Quat> gens;
        for (int j = 0; j < 4; ++j) gens.push_back(vi_inv * L.row_quat(j));
        IdealLat cur = detail::lattice_from_generators(*L.order, gens);
        acc = first ? cur : lattice_intersect(acc, cur);
        first = false;
    }
    return acc;
}

// All lattice vectors of minimal reduced norm, sorted; used to find principal
// generators (class number one).
inline std::vector<Quat> minimal_vectors(const IdealLat& m) {
    detail::QMat4 g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g[i][j] = trd(conj(m.row_quat(i)) * m.row_quat(j)) / 2;
    Rat target = reduced_norm(m);
    detail::QVec4 zero{};
    std::vector<Quat> best;
    for (const auto& k : detail::enum_qform(g, zero, target)) {
        Quat v = quat_zero(m.order->alg);
        for (int i = 0; i < 4; ++i) v = v + Rat(k[i]) * m.row_quat(i);
        if (nrd(v) == target) best.push_back(v);
    }
    std::sort(best.begin(), best.end());
    return best;
}

} // namespace ww
