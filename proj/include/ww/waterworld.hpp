#pragma once

#include "ww/spine.hpp"

namespace ww {

// Enumeration window: cusps x y^{-1} with denominator norm at most
// denom_norm_max and value norm at most box_nsq, plus infinity.
struct Region {
    Int denom_norm_max;
    Rat box_nsq;
};

// sized so that the trace-form certificate cells always lie inside
inline Region default_region(const OrderCtx& o) { return {Int(o.alg->disc), Rat(2)}; }

inline CuspSet region_cusps(const OrderCtx& o, const Region& region) {
    CuspSet out;
    out.push_back(cusp_infinity(o));
    std::vector<Quat> denominators;
    for (const Quat& y : order_ball(o, quat_zero(o.alg), Rat(region.denom_norm_max)))
        if (!y.is_zero() && detail::is_unit_orbit_rep(o, y)) denominators.push_back(y);
    auto scan = [&](size_t i) {
        const Quat& y = denominators[i];
        std::vector<Quat> values;
        Quat yinv = inverse(y);
        for (const Quat& x : order_ball(o, quat_zero(o.alg), region.box_nsq * nrd(y))) {
            Quat a = x * yinv;
            if (nrd(a) <= region.box_nsq) values.push_back(a);
        }
        return values;
    };
    auto chunks = detail::parallel_map<std::vector<Quat>>(denominators.size(), scan);
    std::set<Quat> values;
    for (auto& chunk : chunks) values.insert(chunk.begin(), chunk.end());
    std::vector<Quat> unique(values.begin(), values.end());
    auto build = [&](size_t i) { return cusp_of(o, unique[i]); };
    auto cusps = detail::parallel_map<Cusp>(unique.size(), build);
    out.insert(out.end(), cusps.begin(), cusps.end());
    cuspset_normalize(out);
    return out;
}

inline std::vector<Cusp> flooded_cusps(const OrderCtx& o, const HForm& f, const Region& region) {
    if (!is_integral(o, f) || disc(f) <= 0)
        throw usage_error("flooded_cusps requires an integral indefinite form");
    std::vector<Cusp> out;
    for (const Cusp& c : region_cusps(o, region))
        if (F_value(o, f, c) == 0) out.push_back(c);
    return out;
}

struct CellPair {
    Cusp alpha, beta;
    Rat f_alpha, f_beta;
    Rat gap;
};

struct WaterworldReport {
    HForm form;
    Region region;
    Rat delta;
    std::vector<Cusp> flooded;
    std::vector<CellPair> certified;  // opposite signs and gap = 1: a 4-cell of the waterworld
    std::vector<CellPair> candidates; // opposite signs and 1 < gap <= D_A: cells may meet
    std::vector<std::pair<Cusp, Rat>> values; // F on every region cusp
};

// Sign classification of the Ford-Voronoi cells in the region and extraction
// of the waterworld 4-cells.  gap = 1 certifies the pair (the tangency point
// of the unit horoballs lies in both closed cells); gap in (1, D_A] is only a
// necessary condition and is reported as a candidate; gap > D_A excludes the
// pair.  Every reported pair obeys -F(a) F(b) <= D_A * disc(f).
inline WaterworldReport extract(const OrderCtx& o, const HForm& f, const Region& region) {
    if (!is_integral(o, f) || disc(f) <= 0)
        throw usage_error("extract requires an integral indefinite form");
    WaterworldReport rep{f, region, disc(f), {}, {}, {}, {}};
    CuspSet cusps = region_cusps(o, region);
    for (const Cusp& c : cusps) {
        Rat v = F_value(o, f, c);
        rep.values.emplace_back(c, v);
        if (v == 0) rep.flooded.push_back(c);
    }
    const Rat bound = Rat(o.alg->disc) * rep.delta;
    for (size_t i = 0; i < cusps.size(); ++i)
        for (size_t j = i + 1; j < cusps.size(); ++j) {
            const Rat& fi = rep.values[i].second;
            const Rat& fj = rep.values[j].second;
            if (fi * fj >= 0) continue;
            Rat gap = horoball_gap(cusps[i], cusps[j]);
            if (gap > o.alg->disc) continue;
            if (-fi * fj > bound)
                throw invariant_violation("pair violates the -F(a)F(b) <= D_A disc bound");
            CellPair pair{cusps[i], cusps[j], fi, fj, gap};
            (gap == 1 ? rep.certified : rep.candidates).push_back(pair);
        }
    return rep;
}

// Affine map u -> (tr(conj(j + u) b) + c) / n(I_j) describing F on the cells
// around a flooded cell at infinity, one map per O-translation coset.
struct AffineMap {
    Quat coset_rep; // j; zero for the integral coset
    Rat nI;         // n(I_j)
    Quat b;
    Rat c;

    Rat eval(const Quat& u) const { return (trd(conj(coset_rep + u) * b) + c) / nI; }
};

// Family of affine progressions along the flooded cell at infinity (a(f) = 0).
// Cosets are found among the cells adjacent to it inside the region; the map
// values are checked against F on the sampled cusps.
inline std::vector<AffineMap> progression(const OrderCtx& o, const HForm& f,
                                          const Region& region) {
    if (f.a != 0) throw usage_error("progression requires a(f) = 0");
    if (f.b.is_zero()) throw usage_error("progression requires b(f) != 0");
    if (!is_integral(o, f) || disc(f) <= 0)
        throw usage_error("progression requires an integral indefinite form");
    std::vector<AffineMap> maps;
    maps.push_back({quat_zero(o.alg), 1, f.b, f.c});
    Cusp inf = cusp_infinity(o);
    std::vector<Quat> seen_reps{quat_zero(o.alg)};
    CuspSet adjacent;
    for (const Cusp& c : region_cusps(o, region)) {
        if (c.infinite) continue;
        if (horoball_gap(inf, c) > o.alg->disc) continue; // cannot meet the cell at infinity
        adjacent.push_back(c);
        Quat rep = c.alpha - euclid_divide(o, c.alpha);
        bool known = false;
        for (const Quat& r : seen_reps)
            if (r == rep) known = true;
        if (!known) {
            seen_reps.push_back(rep);
            maps.push_back({rep, cusp_of(o, rep).nI, f.b, f.c});
        }
    }
    for (const Cusp& c : adjacent) {
        Quat rep = c.alpha - euclid_divide(o, c.alpha);
        bool matched = false;
        for (const AffineMap& m : maps)
            if (m.coset_rep == rep && m.eval(c.alpha - rep) == F_value(o, f, c))
                matched = true;
        if (!matched)
            throw invariant_violation("progression maps do not reproduce F near infinity");
    }
    return maps;
}

struct DisjointnessResult {
    bool disjoint = true;
    std::optional<std::pair<Cusp, Cusp>> witness;
};

// gap > D_A forces disjoint Ford-Voronoi cells, so a flooded family passing
// this test is pairwise disjoint; the first failing pair (canonical order) is
// returned as a witness of possible overlap.
inline DisjointnessResult flooded_disjointness(const OrderCtx& o, const HForm& f,
                                               const Region& region) {
    std::vector<Cusp> flooded = flooded_cusps(o, f, region);
    for (size_t i = 0; i < flooded.size(); ++i)
        for (size_t j = i + 1; j < flooded.size(); ++j)
            if (horoball_gap(flooded[i], flooded[j]) <= o.alg->disc)
                return {false, std::make_pair(flooded[i], flooded[j])};
    return {};
}

} // namespace ww
