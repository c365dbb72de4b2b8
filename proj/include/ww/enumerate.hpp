#pragma once

#include <atomic>

#include "ww/geometry.hpp"
#include "ww/parallel.hpp"

namespace ww {

struct CuspQuery {
    UHPoint center;
    Rat ssq;
    enum Mode { Boundary, ClosedBall } mode = Boundary;
};

namespace detail {

// canonical representative of { y * u : u unit }, for skipping redundant
// denominators (right scaling leaves x y^{-1} unchanged)
inline bool is_unit_orbit_rep(const OrderCtx& o, const Quat& y) {
    for (const Quat& u : o.units)
        if (y * u < y) return false;
    return true;
}

} // namespace detail

// All cusps a with d_a(center) = s (Boundary) or <= s (ClosedBall), decided by
// the exact comparison R^2 vs s^2 r^2.  A qualifying finite cusp written with
// a coprime representative [x : y] forces n(y)^2 <= s^2/r^2 and
// n(x - z y) <= s r - r^2 n(y); both bounds drive the exhaustive search.
// bound_scale >= 1 enlarges every search window (over-enumeration is harmless
// and is used by the completeness checks).
inline CuspSet cusps_at(const OrderCtx& o, const CuspQuery& q, const Rat& bound_scale = 1) {
    const Rat rsq = q.center.rsq;
    const Rat ssq_rsq = q.ssq * rsq;
    auto keep = [&](const Rat& dist) {
        Rat d2 = dist * dist;
        return q.mode == CuspQuery::Boundary ? d2 == ssq_rsq : d2 <= ssq_rsq;
    };

    CuspSet out;
    if (keep(Rat(1))) out.push_back(cusp_infinity(o));

    Rat ny_bound = bound_scale * sqrt_upper(q.ssq / rsq);
    std::vector<Quat> denominators;
    for (const Quat& y : order_ball(o, quat_zero(o.alg), ny_bound))
        if (!y.is_zero() && detail::is_unit_orbit_rep(o, y)) denominators.push_back(y);

    Rat sr_upper = sqrt_upper(ssq_rsq);
    auto scan = [&](size_t i) {
        const Quat& y = denominators[i];
        std::vector<Quat> values;
        Rat horiz = bound_scale * bound_scale * sr_upper - rsq * nrd(y);
        if (horiz < 0) return values;
        Quat yinv = inverse(y);
        for (const Quat& x : order_ball(o, q.center.z * y, horiz))
            values.push_back(x * yinv);
        return values;
    };
    auto chunks = detail::parallel_map<std::vector<Quat>>(denominators.size(), scan);
    std::set<Quat> values;
    for (auto& chunk : chunks) values.insert(chunk.begin(), chunk.end());
    std::vector<Quat> unique(values.begin(), values.end());
    auto classify = [&](size_t i) -> std::optional<Cusp> {
        Cusp c = cusp_of(o, unique[i]);
        if (keep(dist_scaled(q.center, c))) return c;
        return std::nullopt;
    };
    for (auto& c : detail::parallel_map<std::optional<Cusp>>(unique.size(), classify))
        if (c) out.push_back(std::move(*c));
    cuspset_normalize(out);
    return out;
}

struct MinimumReport {
    Rat value;
    std::vector<std::pair<Quat, Quat>> witnesses; // lex sorted; all attaining pairs found
};

// Minimum of a positive definite Hamiltonian form on O x O - {0}, by exact
// enumeration inside the ellipsoid f <= min(f(1,0), f(0,1)).  Uses the
// splitting f(u, v) = a n(u + a^{-1} b v) + (-disc/a) n(v).
inline MinimumReport min_positive_value(const OrderCtx& o, const HForm& f) {
    if (disc(f) >= 0) throw usage_error("min_positive_value requires a definite form");
    if (f.a <= 0) throw usage_error("min_positive_value requires a positive form");
    const Rat neg_disc = -disc(f);
    const Quat one = quat_one(o.alg);
    const Quat zero = quat_zero(o.alg);

    Rat best = f.a < f.c ? f.a : f.c;
    std::vector<std::pair<Quat, Quat>> candidates;
    candidates.emplace_back(one, zero);
    candidates.emplace_back(zero, one);

    // v = 0 column: f = a n(u)
    for (const Quat& u : order_ball(o, zero, best / f.a))
        if (!u.is_zero()) candidates.emplace_back(u, zero);
    // v != 0: u near -a^{-1} b v within the remaining budget
    for (const Quat& v : order_ball(o, zero, best * f.a / neg_disc)) {
        if (v.is_zero()) continue;
        Rat remaining = best - neg_disc / f.a * nrd(v);
        if (remaining < 0) continue;
        Quat center = -(Rat(1) / f.a) * (f.b * v);
        for (const Quat& u : order_ball(o, center, remaining / f.a))
            candidates.emplace_back(u, v);
    }

    MinimumReport rep;
    rep.value = best;
    for (const auto& [u, v] : candidates) {
        Rat val = f_eval(f, u, v);
        if (val < rep.value) rep.value = val;
    }
    for (const auto& [u, v] : candidates)
        if (f_eval(f, u, v) == rep.value) rep.witnesses.emplace_back(u, v);
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
    rep.witnesses.erase(std::unique(rep.witnesses.begin(), rep.witnesses.end()),
                        rep.witnesses.end());
    return rep;
}

// Cusp realizing d_a(x) <= sqrt(D_A) (always exists); returns the cusp of the
// minimizing pair of r * Theta(x) and the scaled distance R_a(x).
inline std::pair<Cusp, Rat> coverage_witness(const OrderCtx& o, const UHPoint& x) {
    MinimumReport rep = min_positive_value(o, theta_scaled(x));
    const auto& [u, v] = rep.witnesses.front();
    Cusp c = canonicalize(o, u, v);
    Rat dist = dist_scaled(x, c);
    if (dist * dist > Rat(o.alg->disc) * x.rsq)
        throw invariant_violation("coverage witness exceeded the sqrt(D_A) bound");
    return {c, dist};
}

} // namespace ww
