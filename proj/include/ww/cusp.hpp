#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ww/ideal.hpp"
#include "ww/mat2.hpp"

namespace ww {

// Point of P^1_r(A) = A + {infinity}.  Finite cusps cache the ideal
// I_alpha = O*alpha + O, its reduced norm, and a coprime representative
// [x : y] with n(O*x + O*y) = 1 (available since the class number is one).
struct Cusp {
    bool infinite = false;
    Quat alpha;        // finite cusps only
    Quat rep_x, rep_y; // coprime representative; (1, 0) for infinity
    IdealLat ideal;    // I_alpha; the full order for infinity
    Rat nI = 1;        // reduced norm of the ideal
    const OrderCtx* order = nullptr;
};

inline bool operator==(const Cusp& a, const Cusp& b) {
    if (a.infinite != b.infinite) return false;
    return a.infinite || a.alpha == b.alpha;
}
inline bool operator!=(const Cusp& a, const Cusp& b) { return !(a == b); }
// canonical order: infinity first, then by reduced norm, then by coordinates
inline bool operator<(const Cusp& a, const Cusp& b) {
    if (a.infinite != b.infinite) return a.infinite;
    if (a.infinite) return false;
    Rat na = nrd(a.alpha), nb = nrd(b.alpha);
    if (na != nb) return na < nb;
    return a.alpha < b.alpha;
}

inline std::string cusp_str(const Cusp& c) { return c.infinite ? "inf" : quat_str(c.alpha); }

inline Cusp cusp_infinity(const OrderCtx& o) {
    Cusp c;
    c.infinite = true;
    c.rep_x = quat_one(o.alg);
    c.rep_y = quat_zero(o.alg);
    c.ideal = principal_ideal(o, quat_one(o.alg));
    c.nI = 1;
    c.order = &o;
    return c;
}

// [x : y] -> canonical cusp.  The coprime representative divides out the
// lex-least principal generator of O*x + O*y, so it is deterministic.
inline Cusp canonicalize(const OrderCtx& o, const Quat& x, const Quat& y) {
    if (x.is_zero() && y.is_zero()) throw usage_error("canonicalize of (0, 0)");
    if (y.is_zero()) return cusp_infinity(o);

    Cusp c;
    c.order = &o;
    c.alpha = rdiv(x, y);

    // integral representative pair
    Int m = 1;
    for (const Rat& v : o.to_coords(c.alpha)) m = lcm(m, rat_den(v));
    Quat xi = c.alpha * Rat(m);
    Quat yi = quat_scalar(o.alg, Rat(m));

    IdealLat pair_ideal = two_gen_ideal(o, xi, yi);
    Rat pair_norm = reduced_norm(pair_ideal);
    Quat g = quat_one(o.alg);
    if (pair_norm == 1) {
        g = o.units.front(); // the whole order; its least minimal vector is a unit
    } else {
        std::vector<Quat> gens = minimal_vectors(pair_ideal);
        if (gens.empty())
            throw invariant_violation(
                "no principal generator at the ideal norm (class number > 1?)");
        g = gens.front();
    }
    c.rep_x = xi * inverse(g);
    c.rep_y = yi * inverse(g);
    if (!o.contains(c.rep_x) || !o.contains(c.rep_y))
        throw invariant_violation("coprime representative left the order");

    // I_alpha = (O x_i + O y_i) / m, rescaled into canonical form
    c.ideal = pair_ideal;
    c.ideal.denom *= m;
    Int content = 0;
    for (const auto& row : c.ideal.hnf)
        for (const Int& v : row) content = gcd(content, v);
    Int shrink = gcd(content, c.ideal.denom);
    if (shrink > 1) {
        c.ideal.denom /= shrink;
        for (auto& row : c.ideal.hnf)
            for (Int& v : row) v /= shrink;
    }
    c.nI = pair_norm / Rat(m * m);
    if (c.nI > 1 || c.nI * Rat(nrd(c.rep_y)) != 1)
        throw invariant_violation("cusp ideal norm inconsistent with representative");
    return c;
}

inline Cusp cusp_of(const OrderCtx& o, const Quat& alpha) {
    return canonicalize(o, alpha, quat_one(o.alg));
}

// cusp from projective value (nullopt = infinity)
inline Cusp cusp_of(const OrderCtx& o, const std::optional<Quat>& v) {
    return v ? cusp_of(o, *v) : cusp_infinity(o);
}

inline std::optional<Quat> cusp_value(const Cusp& c) {
    return c.infinite ? std::nullopt : std::optional<Quat>(c.alpha);
}

// left action of GL_2(A) through the representative pair
inline Cusp cusp_apply(const OrderCtx& o, const Mat2& g, const Cusp& c) {
    auto [u, v] = apply(g, c.rep_x, c.rep_y);
    return canonicalize(o, u, v);
}

// sorted duplicate-free set keyed by the cusp value
using CuspSet = std::vector<Cusp>;

inline void cuspset_normalize(CuspSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool cuspset_contains(const CuspSet& s, const Cusp& c) {
    return std::binary_search(s.begin(), s.end(), c);
}

} // namespace ww
