#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ww;

static HForm trace_form(const OrderCtx& o) { return {0, quat_one(o.alg), 0}; }

TEST_CASE("flooded cusps") {
    const OrderCtx& h = tt::H();
    Region reg = default_region(h);
    auto flooded = flooded_cusps(h, trace_form(h), reg);
    REQUIRE(cuspset_contains(flooded, cusp_infinity(h)));
    REQUIRE(cuspset_contains(flooded, cusp_of(h, quat_zero(h.alg))));

    HForm f{1, tt::hq(0, 1, 0, 0), -1};
    auto fl2 = flooded_cusps(h, f, reg);
    REQUIRE(cuspset_contains(fl2, cusp_of(h, quat_one(h.alg))));

    // a(f) = 0 with b = 3, c = 5: infinity floods but no denominator-norm <= 2 cusp does
    HForm f35{0, quat_scalar(h.alg, 3), 5};
    auto fl3 = flooded_cusps(h, f35, {2, Rat(16)});
    REQUIRE(fl3.size() == 1);
    REQUIRE(fl3.front().infinite);

    REQUIRE_THROWS_AS(flooded_cusps(h, HForm{1, quat_zero(h.alg), 1}, reg), usage_error);
}

TEST_CASE("waterworld extraction for the trace form") {
    for (const OrderCtx* o : {&tt::H(), &tt::D3()}) {
        HForm tr = trace_form(*o);
        WaterworldReport rep = extract(*o, tr, default_region(*o));
        REQUIRE(rep.delta == 1);
        // the certified cell (a, -conj a) with tr a = 1
        Quat a = o->name == "hurwitz" ? tt::omega() : tt::rho();
        Cusp ca = cusp_of(*o, a);
        Cusp cb = cusp_of(*o, a - quat_one(o->alg)); // -conj(a) for tr a = 1
        bool present = false;
        for (const CellPair& p : rep.certified)
            present = present || (p.alpha == std::min(ca, cb) && p.beta == std::max(ca, cb)) ||
                      (p.alpha == ca && p.beta == cb) || (p.alpha == cb && p.beta == ca);
        REQUIRE(present);
        // every reported pair satisfies the discriminant bound
        Rat bound = Rat(o->alg->disc) * rep.delta;
        for (const auto* cells : {&rep.certified, &rep.candidates})
            for (const CellPair& p : *cells) {
                REQUIRE(p.f_alpha * p.f_beta < 0);
                REQUIRE(-p.f_alpha * p.f_beta <= bound);
                REQUIRE(p.gap >= 1);
                REQUIRE(p.gap <= o->alg->disc);
            }
        for (const CellPair& p : rep.certified) REQUIRE(p.gap == 1);
        // discreteness: with coprime representatives every value is an integer
        for (const auto& [c, v] : rep.values) REQUIRE(rat_den(v) == 1);
    }
}

TEST_CASE("prop bound on an indefinite sphere form") {
    const OrderCtx& h = tt::H();
    HForm f{1, tt::hq(0, 1, 0, 0), -1};
    REQUIRE(disc(f) == 2);
    WaterworldReport rep = extract(h, f, default_region(h));
    for (const auto* cells : {&rep.certified, &rep.candidates})
        for (const CellPair& p : *cells) REQUIRE(-p.f_alpha * p.f_beta <= 4);
    REQUIRE(!rep.certified.empty());
}

TEST_CASE("waterworld rejects definite or fractional forms") {
    const OrderCtx& h = tt::H();
    REQUIRE_THROWS_AS(extract(h, HForm{1, quat_zero(h.alg), 1}, default_region(h)),
                      usage_error);
    REQUIRE_THROWS_AS(extract(h, HForm{Rat(1, 2), quat_one(h.alg), -1}, default_region(h)),
                      usage_error);
}

TEST_CASE("affine progressions at a flooded cell") {
    const OrderCtx& h = tt::H();
    HForm tr = trace_form(h);
    auto maps = progression(h, tr, default_region(h));
    REQUIRE(!maps.empty());
    REQUIRE(maps.front().coset_rep.is_zero());
    // the integral-coset map is u -> tr(conj u): check against F on neighbors
    tt::Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        Quat u = tt::rand_order_elt(rng, h, 3);
        REQUIRE(maps.front().eval(u) == trd(conj(u)));
    }
    // shift invariance: the affine map translates exactly by its linear part
    for (const AffineMap& m : maps) {
        Quat u = tt::rand_order_elt(rng, h, 2);
        Quat w = tt::rand_order_elt(rng, h, 2);
        REQUIRE(m.eval(u + w) - m.eval(u) == trd(conj(w) * m.b) / m.nI);
    }

    HForm f35{0, quat_scalar(h.alg, 3), 5};
    auto maps35 = progression(h, f35, default_region(h));
    for (int i = 0; i < 20; ++i) {
        Quat u = tt::rand_order_elt(rng, h, 3);
        REQUIRE(maps35.front().eval(u) == 3 * trd(conj(u)) + 5);
    }

    REQUIRE_THROWS_AS(progression(h, HForm{1, quat_one(h.alg), -1}, default_region(h)),
                      usage_error);
}

TEST_CASE("flooded disjointness") {
    const OrderCtx& h = tt::H();
    // b = 3, c = 5: within the default region the flooded family is a single cell
    HForm f35{0, quat_scalar(h.alg, 3), 5};
    REQUIRE(flooded_disjointness(h, f35, default_region(h)).disjoint);
    // trace form: H_inf and H_0 are both flooded and their unit horoballs touch
    auto res = flooded_disjointness(h, trace_form(h), default_region(h));
    REQUIRE(!res.disjoint);
    REQUIRE(res.witness->first == cusp_infinity(h));
    REQUIRE(res.witness->second == cusp_of(h, quat_zero(h.alg)));
}

TEST_CASE("flooded disjointness of the sphere form, recorded") {
    const OrderCtx& h = tt::H();
    HForm f{1, tt::hq(0, 1, 0, 0), -1};
    auto res = flooded_disjointness(h, f, default_region(h));
    // the zero sphere passes through several unit cusps (1, -1, +-j, +-k),
    // so nearby flooded cells sit within the critical gap
    REQUIRE(!res.disjoint);
    REQUIRE(F_value(h, f, res.witness->first) == 0);
    REQUIRE(F_value(h, f, res.witness->second) == 0);
    REQUIRE(horoball_gap(res.witness->first, res.witness->second) <= 2);
}

TEST_CASE("zero locus separates the signs") {
    tt::Rng rng(72);
    for (const OrderCtx* o : {&tt::H(), &tt::D3()}) {
        for (int t = 0; t < 10; ++t) {
            HForm f = tt::rand_integral_indefinite(rng, *o, 2);
            WaterworldReport rep = extract(*o, f, default_region(*o));
            for (const auto& [c, v] : rep.values) {
                int side = locus_side(f, cusp_value(c));
                REQUIRE((v == 0 ? side == 0 : side == (v > 0 ? 1 : -1)));
            }
        }
    }
}

TEST_CASE("F is constant along random automorph words") {
    // automorphs of the trace form: the swap J, diagonal C_{u,u} over units,
    // and translations T_w with tr w = 0
    tt::Rng rng(74);
    for (const OrderCtx* o : {&tt::H(), &tt::D3()}) {
        HForm tr{0, quat_one(o->alg), 0};
        for (int i = 0; i < 50; ++i) {
            Mat2 g = mat_identity(o->alg);
            int len = static_cast<int>(tt::rand_int(rng, 1, 6));
            for (int s = 0; s < len; ++s) {
                switch (static_cast<int>(tt::rand_int(rng, 0, 2))) {
                    case 0: g = g * mat_J(o->alg); break;
                    case 1: {
                        Quat u = tt::rand_unit(rng, *o);
                        g = g * mat_C(u, u);
                        break;
                    }
                    default: {
                        Quat u = tt::rand_order_elt(rng, *o, 2);
                        Quat w = u - conj(u); // trace-zero order element
                        g = g * mat_T(w);
                        break;
                    }
                }
            }
            REQUIRE(act(tr, g) == tr);
            for (int k = 0; k < 4; ++k) {
                Cusp c = tt::rand_cusp(rng, *o, 2);
                REQUIRE(F_value(*o, tr, cusp_apply(*o, g, c)) == F_value(*o, tr, c));
            }
        }
    }
}

TEST_CASE("automorphs preserve the certified cells") {
    const OrderCtx& h = tt::H();
    HForm tr = trace_form(h);
    Mat2 J = mat_J(h.alg);
    REQUIRE(act(tr, J) == tr); // J is an automorph of the trace form
    Region reg = default_region(h);
    WaterworldReport rep = extract(h, tr, reg);
    std::set<std::pair<Cusp, Cusp>> cells;
    for (const CellPair& p : rep.certified) cells.insert({p.alpha, p.beta});
    size_t interior_checked = 0;
    for (const CellPair& p : rep.certified) {
        Cusp ia = cusp_apply(h, J, p.alpha);
        Cusp ib = cusp_apply(h, J, p.beta);
        auto in_region = [&](const Cusp& c) {
            return c.infinite ||
                   (nrd(c.alpha) <= reg.box_nsq && nrd(c.rep_y) <= reg.denom_norm_max);
        };
        if (!in_region(ia) || !in_region(ib)) continue;
        if (ib < ia) std::swap(ia, ib);
        REQUIRE(cells.count({ia, ib}) == 1);
        ++interior_checked;
    }
    REQUIRE(interior_checked > 0);
}

TEST_CASE("region enumeration is complete for its bounds") {
    const OrderCtx& h = tt::H();
    Region reg{2, Rat(2)};
    CuspSet cusps = region_cusps(h, reg);
    REQUIRE(cuspset_contains(cusps, cusp_infinity(h)));
    // brute-force comparison over raw pairs with denominators of norm <= 2
    std::set<Quat> expected;
    tt::Rng rng(73);
    for (const Quat& y : order_ball(h, quat_zero(h.alg), 2)) {
        if (y.is_zero()) continue;
        for (const Quat& x : order_ball(h, quat_zero(h.alg), 2 * nrd(y))) {
            Quat a = rdiv(x, y);
            if (nrd(a) <= 2) expected.insert(a);
        }
    }
    std::set<Quat> got;
    for (const Cusp& c : cusps)
        if (!c.infinite) got.insert(c.alpha);
    REQUIRE(got == expected);
}
