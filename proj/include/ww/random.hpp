#pragma once

#include <random>

#include "ww/hform.hpp"
#include "ww/order.hpp"

// Deterministic generators for randomized verification; everything is driven
// by an explicit engine so suites replay from a seed.
namespace ww::rnd {

using Engine = std::mt19937_64;

inline int uniform_int(Engine& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rat rat(Engine& rng, int num_range, int den_range) {
    return Rat(uniform_int(rng, -num_range, num_range), uniform_int(rng, 1, den_range));
}

inline Quat quat(Engine& rng, const AlgebraSpec* alg, int num_range, int den_range) {
    return {alg, rat(rng, num_range, den_range), rat(rng, num_range, den_range),
            rat(rng, num_range, den_range), rat(rng, num_range, den_range)};
}

inline Quat order_elt(Engine& rng, const OrderCtx& o, int range) {
    std::array<Int, 4> k;
    for (auto& v : k) v = uniform_int(rng, -range, range);
    return o.from_int_coords(k);
}

inline Quat unit(Engine& rng, const OrderCtx& o) {
    return o.units[static_cast<size_t>(
        uniform_int(rng, 0, static_cast<int>(o.units.size()) - 1))];
}

// random word in the generators J, T_w, C_{u,v}
inline Mat2 sl2_order(Engine& rng, const OrderCtx& o, int max_len) {
    Mat2 m = mat_identity(o.alg);
    int len = uniform_int(rng, 1, max_len);
    for (int s = 0; s < len; ++s) {
        switch (uniform_int(rng, 0, 2)) {
            case 0: m = m * mat_J(o.alg); break;
            case 1: m = m * mat_T(order_elt(rng, o, 2)); break;
            default: m = m * mat_C(unit(rng, o), unit(rng, o)); break;
        }
    }
    return m;
}

// random element of SL2 of the algebra: dilations C_{u, conj(u)/n(u)} keep
// the Dieudonne determinant at 1
inline Mat2 sl2_algebra(Engine& rng, const OrderCtx& o, int max_len) {
    Mat2 m = mat_identity(o.alg);
    int len = uniform_int(rng, 1, max_len);
    for (int s = 0; s < len; ++s) {
        switch (uniform_int(rng, 0, 2)) {
            case 0: m = m * mat_J(o.alg); break;
            case 1: m = m * mat_T(quat(rng, o.alg, 2, 2)); break;
            default: {
                Quat u = order_elt(rng, o, 1);
                if (u.is_zero()) u = quat_one(o.alg);
                m = m * mat_C(u, conj(u) / nrd(u));
                break;
            }
        }
    }
    return m;
}

inline UHPoint point(Engine& rng, const AlgebraSpec* alg, int num_range, int den_range) {
    Rat rsq = 0;
    while (rsq <= 0) rsq = rat(rng, num_range, den_range);
    return {quat(rng, alg, num_range, den_range), rsq};
}

inline HForm integral_indefinite(Engine& rng, const OrderCtx& o, int range) {
    while (true) {
        HForm f{Rat(uniform_int(rng, -range, range)), order_elt(rng, o, range),
                Rat(uniform_int(rng, -range, range))};
        if (disc(f) > 0) return f;
    }
}

inline Cusp cusp(Engine& rng, const OrderCtx& o, int range, bool allow_inf = true) {
    if (allow_inf && uniform_int(rng, 0, 9) == 0) return cusp_infinity(o);
    while (true) {
        Quat x = order_elt(rng, o, range);
        Quat y = order_elt(rng, o, range);
        if (!y.is_zero()) return canonicalize(o, x, y);
        if (!x.is_zero()) return cusp_infinity(o);
    }
}

} // namespace ww::rnd
