#pragma once

#include <functional>
#include <set>

#include "ww/flags.hpp"
#include "ww/random.hpp"
#include "ww/reference_data.hpp"
#include "ww/waterworld.hpp"

// Named verification suites driven by a seed.  Each check is independent and
// reports a one-line result; exceptions are converted into failures with the
// message as the witness.
namespace ww::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
};

template <typename Fn>
void check(SuiteReport& rep, const std::string& name, Fn&& fn) {
    CheckResult r{name, false, {}};
    Checker c;
    try {
        fn(c);
        r.pass = c.ok;
        r.detail = c.detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    rep.checks.push_back(std::move(r));
}

inline const std::vector<const OrderCtx*>& both_presets() {
    static const std::vector<const OrderCtx*> presets = {&order_preset("hurwitz"),
                                                         &order_preset("da3")};
    return presets;
}

} // namespace detail

inline SuiteReport suite_algebra(uint64_t seed) {
    using detail::Checker;
    SuiteReport rep{"algebra", {}};
    detail::check(rep, "reduced norm is multiplicative (1000 samples)", [&](Checker& c) {
        rnd::Engine rng(seed);
        for (const OrderCtx* o : detail::both_presets())
            for (int i = 0; i < 500; ++i) {
                Quat x = rnd::quat(rng, o->alg, 5, 4), y = rnd::quat(rng, o->alg, 5, 4);
                c.expect(nrd(x * y) == nrd(x) * nrd(y),
                         "n(xy) != n(x)n(y) at " + quat_str(x) + ", " + quat_str(y));
                c.expect(trd(x * y) == trd(y * x), "tr(xy) != tr(yx)");
            }
    });
    detail::check(rep, "det2sq multiplicative, adjoint-invariant, matches the c-form", [&](Checker& c) {
        rnd::Engine rng(seed + 1);
        for (const OrderCtx* o : detail::both_presets())
            for (int i = 0; i < 200; ++i) {
                auto q = [&] { return rnd::quat(rng, o->alg, 3, 2); };
                Mat2 m{q(), q(), q(), q()}, n{q(), q(), q(), q()};
                c.expect(det2sq(m * n) == det2sq(m) * det2sq(n), "det2sq not multiplicative");
                c.expect(det2sq(adjoint(m)) == det2sq(m), "det2sq not adjoint invariant");
                if (!m.c.is_zero())
                    c.expect(det2sq_via_c(m) == det2sq(m), "c-form formula disagrees");
            }
    });
    detail::check(rep, "projective and isometric actions compose (400 samples)", [&](Checker& c) {
        rnd::Engine rng(seed + 2);
        for (const OrderCtx* o : detail::both_presets())
            for (int i = 0; i < 200; ++i) {
                Mat2 g = rnd::sl2_order(rng, *o, 6), h = rnd::sl2_order(rng, *o, 6);
                std::optional<Quat> p;
                if (rnd::uniform_int(rng, 0, 4) != 0) p = rnd::quat(rng, o->alg, 3, 3);
                c.expect(mobius(g * h, p) == mobius(g, mobius(h, p)),
                         "homography action law failed");
                UHPoint x = rnd::point(rng, o->alg, 3, 3);
                c.expect(isometry(g * h, x) == isometry(g, isometry(h, x)),
                         "isometry action law failed");
            }
    });
    detail::check(rep, "two-point distance identity (400 samples)", [&](Checker& c) {
        rnd::Engine rng(seed + 3);
        for (const OrderCtx* o : detail::both_presets()) {
            int done = 0;
            while (done < 200) {
                Mat2 g = rnd::sl2_order(rng, *o, 6);
                Quat z = rnd::quat(rng, o->alg, 3, 3), w = rnd::quat(rng, o->alg, 3, 3);
                Quat dz = g.c * z + g.d, dw = g.c * w + g.d;
                if (dz.is_zero() || dw.is_zero()) continue;
                auto gz = mobius(g, std::optional<Quat>(z));
                auto gw = mobius(g, std::optional<Quat>(w));
                c.expect(nrd(*gz - *gw) * nrd(dz) * nrd(dw) == nrd(z - w),
                         "two-point identity failed");
                ++done;
            }
        }
    });
    return rep;
}

inline SuiteReport suite_ideals(uint64_t seed) {
    using detail::Checker;
    SuiteReport rep{"ideals", {}};
    detail::check(rep, "order axioms and unit counts", [&](Checker& c) {
        c.expect(order_preset("hurwitz").units.size() == 24, "hurwitz unit count");
        c.expect(order_preset("da3").units.size() == 12, "da3 unit count");
    });
    detail::check(rep, "integral two-generator indices are perfect squares (500)", [&](Checker& c) {
        rnd::Engine rng(seed + 10);
        for (const OrderCtx* o : detail::both_presets())
            for (int i = 0; i < 250; ++i) {
                Quat x = rnd::order_elt(rng, *o, 4), y = rnd::order_elt(rng, *o, 4);
                if (x.is_zero() && y.is_zero()) continue;
                IdealLat m = two_gen_ideal(*o, x, y);
                Int index = 1;
                for (int k = 0; k < 4; ++k) index *= m.hnf[k][k];
                Rat n = reduced_norm(m);
                c.expect(Rat(index) == n * n, "index is not the square of the norm");
            }
    });
    detail::check(rep, "norm multiplies over compatible products (500)", [&](Checker& c) {
        rnd::Engine rng(seed + 11);
        for (const OrderCtx* o : detail::both_presets()) {
            Quat p = o->name == "hurwitz" ? Quat(o->alg, 1, 1, 0, 0)
                                          : Quat(o->alg, 0, 1, 0, 0);
            for (int i = 0; i < 250; ++i) {
                Quat g = quat_scalar(o->alg, Rat(rnd::uniform_int(rng, 1, 3)));
                for (int e = rnd::uniform_int(rng, 0, 2); e > 0; --e) g = g * p;
                Quat x = rnd::order_elt(rng, *o, 3), y = rnd::order_elt(rng, *o, 3);
                if (x.is_zero() && y.is_zero()) continue;
                IdealLat m1 = principal_ideal(*o, g);
                IdealLat m2 = two_gen_ideal(*o, x, y);
                c.expect(reduced_norm(ideal_product(m1, m2)) ==
                             reduced_norm(m1) * reduced_norm(m2),
                         "compatible product norm failed");
            }
        }
    });
    detail::check(rep, "right scaling divides the ideal norm (200)", [&](Checker& c) {
        rnd::Engine rng(seed + 12);
        for (const OrderCtx* o : detail::both_presets()) {
            int done = 0;
            while (done < 100) {
                Quat x = rnd::order_elt(rng, *o, 3), y = rnd::order_elt(rng, *o, 3);
                if (y.is_zero()) continue;
                Cusp a = canonicalize(*o, x, y);
                c.expect(a.infinite ||
                             a.nI == reduced_norm(two_gen_ideal(*o, x, y)) / nrd(y),
                         "n(I_a) != n(Ox + Oy)/n(y)");
                ++done;
            }
        }
    });
    detail::check(rep, "two-generator inverses invert the norm (100)", [&](Checker& c) {
        rnd::Engine rng(seed + 13);
        for (const OrderCtx* o : detail::both_presets())
            for (int i = 0; i < 50; ++i) {
                Quat x = rnd::order_elt(rng, *o, 3), y = rnd::order_elt(rng, *o, 3);
                if (x.is_zero() || y.is_zero()) continue;
                c.expect(reduced_norm(ideal_inverse_two_gen(*o, x, y)) *
                                 reduced_norm(two_gen_ideal(*o, x, y)) ==
                             1,
                         "inverse norm is not reciprocal");
            }
    });
    detail::check(rep, "gcd of element norms equals the index norm (100)", [&](Checker& c) {
        rnd::Engine rng(seed + 14);
        for (const OrderCtx* o : detail::both_presets())
            for (int i = 0; i < 50; ++i) {
                Quat x = rnd::order_elt(rng, *o, 3), y = rnd::order_elt(rng, *o, 3);
                if (x.is_zero() && y.is_zero()) continue;
                IdealLat m = two_gen_ideal(*o, x, y);
                Int g = 0;
                for (int r = 0; r < 4; ++r) g = gcd(g, rat_num(nrd(m.row_quat(r))));
                for (const Quat& v : minimal_vectors(m)) g = gcd(g, rat_num(nrd(v)));
                c.expect(Rat(g) == reduced_norm(m), "gcd norm disagrees with index norm");
            }
    });
    detail::check(rep, "euclidean remainders stay under the covering radius (10000)", [&](Checker& c) {
        rnd::Engine rng(seed + 15);
        for (const OrderCtx* o : detail::both_presets()) {
            Rat cov = o->name == "hurwitz" ? Rat(1, 2) : Rat(2, 3);
            for (int i = 0; i < 5000; ++i) {
                Quat alpha = rnd::quat(rng, o->alg, 8, 6);
                c.expect(nrd(alpha - euclid_divide(*o, alpha)) <= cov,
                         "remainder above the covering radius at " + quat_str(alpha));
            }
        }
    });
    return rep;
}

inline SuiteReport suite_distances(uint64_t seed) {
    using detail::Checker;
    SuiteReport rep{"distances", {}};
    detail::check(rep, "pairing has the discriminant diagonal (400)", [&](Checker& c) {
        rnd::Engine rng(seed + 20);
        for (const OrderCtx* o : detail::both_presets())
            for (int i = 0; i < 200; ++i) {
                HForm f{rnd::rat(rng, 4, 3), rnd::quat(rng, o->alg, 4, 3), rnd::rat(rng, 4, 3)};
                HForm g{rnd::rat(rng, 4, 3), rnd::quat(rng, o->alg, 4, 3), rnd::rat(rng, 4, 3)};
                c.expect(pairing(f, f) == -2 * disc(f), "pairing(f,f) != -2 disc");
                c.expect(pairing(f, g) == pairing(g, f), "pairing not symmetric");
                c.expect(pairing(act(f, mat_J(o->alg)), act(g, mat_J(o->alg))) ==
                             pairing(f, g),
                         "pairing not invariant under the swap");
            }
    });
    detail::check(rep, "theta forms have discriminant -r^2 (200)", [&](Checker& c) {
        rnd::Engine rng(seed + 21);
        for (const OrderCtx* o : detail::both_presets())
            for (int i = 0; i < 100; ++i) {
                UHPoint x = rnd::point(rng, o->alg, 4, 3);
                c.expect(disc(theta_scaled(x)) == -x.rsq, "theta discriminant wrong");
                Cusp a = rnd::cusp(rng, *o, 2);
                c.expect(pairing(f_of_cusp(a), theta_scaled(x)) == dist_scaled(x, a),
                         "pairing route disagrees with the distance");
            }
    });
    detail::check(rep, "scaled distance is SL2(O)-invariant (200)", [&](Checker& c) {
        rnd::Engine rng(seed + 22);
        for (const OrderCtx* o : detail::both_presets())
            for (int i = 0; i < 100; ++i) {
                Mat2 g = rnd::sl2_order(rng, *o, 6);
                Cusp a = rnd::cusp(rng, *o, 2);
                UHPoint x = rnd::point(rng, o->alg, 3, 3);
                UHPoint gx = isometry(g, x);
                Rat lhs = dist_scaled(gx, cusp_apply(*o, g, a));
                Rat rhs = dist_scaled(x, a);
                c.expect(lhs * lhs * x.rsq == rhs * rhs * gx.rsq,
                         "R^2 / r^2 not invariant");
            }
    });
    detail::check(rep, "cusp forms scale by the ideal-norm ratio (200)", [&](Checker& c) {
        rnd::Engine rng(seed + 23);
        for (const OrderCtx* o : detail::both_presets()) {
            int done = 0;
            while (done < 100) {
                Mat2 g = rnd::sl2_algebra(rng, *o, 4);
                Quat x = rnd::order_elt(rng, *o, 2), y = rnd::order_elt(rng, *o, 2);
                if (x.is_zero() && y.is_zero()) continue;
                auto [gx, gy] = apply(g, x, y);
                Cusp a = y.is_zero() ? cusp_infinity(*o) : canonicalize(*o, x, y);
                Cusp ga = gy.is_zero() ? cusp_infinity(*o) : canonicalize(*o, gx, gy);
                Rat scale = reduced_norm(two_gen_ideal(*o, x, y)) /
                            reduced_norm(two_gen_ideal(*o, gx, gy));
                HForm lhs = act(f_of_cusp(ga), g);
                HForm rhs = f_of_cusp(a);
                c.expect(lhs.a == scale * rhs.a && lhs.b == scale * rhs.b &&
                             lhs.c == scale * rhs.c,
                         "form scaling identity failed");
                ++done;
            }
        }
    });
    detail::check(rep, "pairwise unit-horoball gaps never drop below 1", [&](Checker& c) {
        rnd::Engine rng(seed + 24);
        for (const OrderCtx* o : detail::both_presets()) {
            CuspSet link =
                cusps_at(*o, {ref::fundamental_vertex(*o), Rat(o->alg->disc),
                              CuspQuery::Boundary});
            for (size_t i = 0; i < link.size(); ++i)
                for (size_t j = i + 1; j < link.size(); ++j)
                    c.expect(horoball_gap(link[i], link[j]) >= 1, "gap below 1");
            for (int i = 0; i < 100; ++i) {
                Cusp a = rnd::cusp(rng, *o, 3), b = rnd::cusp(rng, *o, 3);
                if (a == b) continue;
                c.expect(horoball_gap(a, b) >= 1, "gap below 1 on random pair");
            }
        }
    });
    detail::check(rep, "equidistant surfaces satisfy the R-equality", [&](Checker& c) {
        rnd::Engine rng(seed + 25);
        for (const OrderCtx* o : detail::both_presets()) {
            int done = 0;
            while (done < 50) {
                Cusp a = rnd::cusp(rng, *o, 2), b = rnd::cusp(rng, *o, 2);
                if (a == b) continue;
                SurfaceDescr s = equidistant_surface(a, b);
                UHPoint x = [&]() -> UHPoint {
                    if (s.kind == SurfaceDescr::VerticalPlane) {
                        Quat u = s.normal_or_center;
                        Quat z = rnd::quat(rng, o->alg, 3, 2);
                        int k = 0;
                        while (trd(conj(u) * quat_basis(o->alg, k)) == 0) ++k;
                        z.c[k] -= (trd(conj(u) * z) - s.offset_or_radius_sq) /
                                  trd(conj(u) * quat_basis(o->alg, k));
                        Rat rs = rnd::rat(rng, 3, 2);
                        return {z, rs * rs + Rat(1, 5)};
                    }
                    Quat z = s.normal_or_center + rnd::quat(rng, o->alg, 1, 3);
                    Rat rsq = s.offset_or_radius_sq - nrd(z - s.normal_or_center);
                    if (rsq <= 0) return {s.normal_or_center, s.offset_or_radius_sq};
                    return {z, rsq};
                }();
                c.expect(on_surface(s, x), "sampled point is off the surface");
                c.expect(dist_scaled(x, a) == dist_scaled(x, b), "R-equality failed");
                ++done;
            }
        }
    });
    detail::check(rep, "zero locus transports along the action (20 pairs)", [&](Checker& c) {
        rnd::Engine rng(seed + 26);
        for (const OrderCtx* o : detail::both_presets())
            for (int t = 0; t < 10; ++t) {
                HForm f = rnd::integral_indefinite(rng, *o, 2);
                Mat2 g = rnd::sl2_order(rng, *o, 5);
                HForm fg = act(f, g);
                for (int k = 0; k < 20; ++k) {
                    std::optional<Quat> p;
                    if (rnd::uniform_int(rng, 0, 5) != 0) p = rnd::quat(rng, o->alg, 2, 2);
                    c.expect(on_zero_locus(zero_locus(fg), p) ==
                                 on_zero_locus(zero_locus(f), mobius(g, p)),
                             "locus membership not equivariant");
                    c.expect(locus_side(fg, p) == locus_side(f, mobius(g, p)),
                             "locus side not equivariant");
                }
            }
    });
    return rep;
}

inline SuiteReport suite_link(const OrderCtx& o, uint64_t seed) {
    using detail::Checker;
    SuiteReport rep{o.alg->disc == 2 ? "link2" : "link3", {}};
    ref::LinkCounts want = ref::link_counts(o);
    UHPoint v0 = ref::fundamental_vertex(o);
    detail::check(rep, "incident cusp set matches the reference list", [&](Checker& c) {
        CuspSet found = cusps_at(o, {v0, Rat(o.alg->disc), CuspQuery::Boundary});
        CuspSet expected;
        for (const auto& val : ref::link_cusp_values(o)) expected.push_back(cusp_of(o, val));
        cuspset_normalize(expected);
        c.expect(found.size() == want.cusps,
                 "found " + std::to_string(found.size()) + " cusps, expected " +
                     std::to_string(want.cusps));
        c.expect(found == expected, "cusp set differs from the reference list");
    });
    detail::check(rep, "point-contact pairs match the reference list", [&](Checker& c) {
        LinkReport link = vertex_link(o, v0);
        std::set<std::pair<Cusp, Cusp>> got;
        for (const auto& e : link.edges)
            if (e.label == Tangency::PointContactAtD)
                got.insert({link.cusps[e.i], link.cusps[e.j]});
        std::set<std::pair<Cusp, Cusp>> expected;
        for (const auto& [a, b] : ref::contact_pair_values(o)) {
            Cusp ca = cusp_of(o, a), cb = cusp_of(o, b);
            expected.insert(ca < cb ? std::make_pair(ca, cb) : std::make_pair(cb, ca));
        }
        c.expect(got.size() == want.contact_pairs, "contact pair count differs");
        c.expect(got == expected, "contact pair list differs");
    });
    detail::check(rep, "tangency graph is regular with the right cell count", [&](Checker& c) {
        LinkReport link = vertex_link(o, v0);
        c.expect(link.top_cell_count == want.top_cells,
                 "top cell count " + std::to_string(link.top_cell_count));
        c.expect(link.degree_histogram.size() == 1 &&
                     link.degree_histogram.count(want.degree) == 1,
                 "tangency graph is not " + std::to_string(want.degree) + "-regular");
    });
    detail::check(rep, "doubling the search bounds finds nothing new", [&](Checker& c) {
        CuspSet base = cusps_at(o, {v0, Rat(o.alg->disc), CuspQuery::Boundary});
        CuspSet wide = cusps_at(o, {v0, Rat(o.alg->disc), CuspQuery::Boundary}, 2);
        c.expect(base == wide, "enlarged search changed the cusp set");
    });
    detail::check(rep, "coverage minimum is attained exactly at the vertex", [&](Checker& c) {
        auto [cusp, dist] = coverage_witness(o, v0);
        c.expect(dist * dist == Rat(o.alg->disc) * v0.rsq,
                 "vertex interior to a covering horoball");
    });
    detail::check(rep, "coverage witnesses on random points (50)", [&](Checker& c) {
        rnd::Engine rng(seed + 30);
        for (int i = 0; i < 50; ++i) {
            UHPoint x = rnd::point(rng, o.alg, 3, 3);
            auto [cusp, dist] = coverage_witness(o, x);
            c.expect(dist * dist <= Rat(o.alg->disc) * x.rsq,
                     "coverage bound failed: d = " + dist_str(x, cusp) + " at cusp " +
                         cusp_str(cusp));
        }
    });
    return rep;
}

inline SuiteReport suite_groups(uint64_t seed) {
    using detail::Checker;
    SuiteReport rep{"groups", {}};
    const OrderCtx& d = order_preset("da3");
    detail::check(rep, "vertex inversion reproduces the eight frozen conjugates", [&](Checker& c) {
        Mat2 m = ref::vertex_inversion(d);
        Mat2 minv = inverse(m);
        for (const auto& [name, pair] : ref::inversion_conjugates(d))
            c.expect(m * pair.first * minv == pair.second, "conjugate of " + name + " differs");
    });
    detail::check(rep, "vertex inversion normalizes the whole generator set", [&](Checker& c) {
        for (const auto& chk : check_normalizer(d, ref::vertex_inversion(d)))
            c.expect(chk.pass(), "conjugate of " + chk.generator + " left the group");
    });
    detail::check(rep, "grid group is 3x3 abelian of exponent 3", [&](Checker& c) {
        FiniteGroup grid = group_closure(d, {ref::grid_gen_1(d), ref::grid_gen_2(d)}, 100);
        c.expect(grid.order_mod_center == 9, "grid order is not 9 mod center");
        for (const Mat2& a : grid.elements)
            for (const Mat2& b : grid.elements)
                c.expect(a * b == b * a, "grid group is not abelian");
        for (const Mat2& a : grid.elements) {
            Mat2 cube = a * a * a;
            c.expect(cube == mat_identity(d.alg) || cube == -mat_identity(d.alg),
                     "grid exponent exceeds 3");
        }
    });
    detail::check(rep, "flip inverts the grid and extends it to 18 elements", [&](Checker& c) {
        Mat2 h = ref::flip_gen(d);
        c.expect(h * h == -mat_identity(d.alg), "flip squared is not -1");
        for (const Mat2& g : {ref::grid_gen_1(d), ref::grid_gen_2(d)}) {
            Mat2 conj_g = h * g * inverse(h);
            Mat2 ginv = inverse(g);
            c.expect(conj_g == ginv || conj_g == -ginv, "flip does not invert the grid");
        }
        FiniteGroup sub =
            group_closure(d, {ref::grid_gen_1(d), ref::grid_gen_2(d), h}, 200);
        c.expect(sub.order_mod_center == 18, "extension is not of order 18 mod center");
    });
    detail::check(rep, "full vertex stabilizer has 360 elements mod center", [&](Checker& c) {
        FiniteGroup full = group_closure(
            d, {ref::grid_gen_1(d), ref::grid_gen_2(d), ref::flip_gen(d), ref::corner_gen(d)},
            1500);
        c.expect(full.order_mod_center == 360,
                 "order mod center is " + std::to_string(full.order_mod_center));
    });
    detail::check(rep, "grid orbit of zero is the duoprism vertex set", [&](Checker& c) {
        std::vector<Mat2> gens = {ref::grid_gen_1(d), ref::grid_gen_2(d),
                                  inverse(ref::grid_gen_1(d)), inverse(ref::grid_gen_2(d))};
        std::set<Quat> orbit{quat_zero(d.alg)};
        std::vector<Quat> frontier{quat_zero(d.alg)};
        while (!frontier.empty()) {
            std::vector<Quat> next;
            for (const Quat& p : frontier)
                for (const Mat2& g : gens) {
                    auto img = mobius(g, std::optional<Quat>(p));
                    if (img && orbit.insert(*img).second) next.push_back(*img);
                }
            frontier = std::move(next);
        }
        std::set<Quat> expected;
        for (const Quat& v : ref::duoprism_vertices(d)) expected.insert(v);
        c.expect(orbit == expected, "orbit differs from the duoprism vertices");
    });
    detail::check(rep, "fundamental-cell stabilizers have 1152 and 288 matrices", [&](Checker& c) {
        c.expect(stabilizer_of_sigma(order_preset("hurwitz")).order_matrix == 1152,
                 "hurwitz stabilizer size");
        c.expect(stabilizer_of_sigma(d).order_matrix == 288, "da3 stabilizer size");
    });
    detail::check(rep, "euclidean decomposition round-trips (100 words)", [&](Checker& c) {
        rnd::Engine rng(seed + 40);
        for (const OrderCtx* o : detail::both_presets())
            for (int i = 0; i < 50; ++i) {
                Mat2 m = rnd::sl2_order(rng, *o, 12);
                GenWord w = decompose(*o, m);
                c.expect(reassemble(*o, w) == m, "word does not reassemble");
                for (size_t k = 0; k + 1 < w.c_norms.size(); ++k)
                    c.expect(w.c_norms[k] > w.c_norms[k + 1], "pivot norms not decreasing");
            }
    });
    return rep;
}

inline SuiteReport suite_appendix(uint64_t seed) {
    using detail::Checker;
    SuiteReport rep{"appendixA", {}};
    detail::check(rep, "order gram determinant equals the squared discriminant", [&](Checker& c) {
        c.expect(gram_det_order(order_preset("hurwitz")) == 4, "hurwitz gram det");
        c.expect(gram_det_order(order_preset("da3")) == 9, "da3 gram det");
    });
    detail::check(rep, "distance-covolume identity on 100 random pairs per preset", [&](Checker& c) {
        rnd::Engine rng(seed + 50);
        for (const OrderCtx* o : detail::both_presets())
            for (int i = 0; i < 100; ++i) {
                UHPoint x = rnd::point(rng, o->alg, 3, 3);
                Cusp p = rnd::cusp(rng, *o, 2);
                A3Report a3 = verify_a3(*o, x, p);
                c.expect(a3.ok, "identity failed: R^4 = " + rat_str(a3.lhs) + ", gram " +
                                    rat_str(a3.via_gram) + ", closed " +
                                    rat_str(a3.via_closed));
            }
    });
    detail::check(rep, "flags are representative independent (80)", [&](Checker& c) {
        rnd::Engine rng(seed + 51);
        for (const OrderCtx* o : detail::both_presets()) {
            int done = 0;
            while (done < 40) {
                Quat x = rnd::order_elt(rng, *o, 3), y = rnd::order_elt(rng, *o, 3);
                if (x.is_zero() && y.is_zero()) continue;
                Quat lam = rnd::quat(rng, o->alg, 2, 2);
                if (lam.is_zero()) continue;
                c.expect(flag_of_pair(*o, x, y) == flag_of_pair(*o, x * lam, y * lam),
                         "flag depends on the representative");
                ++done;
            }
        }
    });
    detail::check(rep, "flags are equivariant (80)", [&](Checker& c) {
        rnd::Engine rng(seed + 52);
        for (const OrderCtx* o : detail::both_presets())
            for (int i = 0; i < 40; ++i) {
                Cusp p = rnd::cusp(rng, *o, 2);
                Mat2 g = rnd::sl2_order(rng, *o, 6);
                c.expect(flag_of(*o, cusp_apply(*o, g, p)) ==
                             flag_apply(*o, g, flag_of(*o, p)),
                         "flag action is not equivariant");
            }
    });
    return rep;
}

inline SuiteReport suite_waterworld(const OrderCtx& o, uint64_t seed) {
    using detail::Checker;
    SuiteReport rep{"waterworld", {}};
    detail::check(rep, "trace form certificate pair is present", [&](Checker& c) {
        HForm tr{0, quat_one(o.alg), 0};
        WaterworldReport w = extract(o, tr, default_region(o));
        // a with tr(a) = 1 and its sign-flipped partner -conj(a) = a - 1
        Quat a = quat_zero(o.alg);
        for (const Quat& b : o.basis)
            if (trd(b) == 1) a = b;
        Cusp ca = cusp_of(o, a), cb = cusp_of(o, a - quat_one(o.alg));
        bool present = false;
        for (const CellPair& p : w.certified)
            present = present || (p.alpha == ca && p.beta == cb) ||
                      (p.alpha == cb && p.beta == ca);
        c.expect(trd(a) == 1, "no trace-one element at hand");
        c.expect(present, "certified pair (a, -conj a) missing");
        c.expect(cuspset_contains(w.flooded, cusp_infinity(o)), "infinity not flooded");
    });
    detail::check(rep, "cell values around the fundamental cell match f(u, 1)", [&](Checker& c) {
        rnd::Engine rng(seed + 60);
        for (int t = 0; t < 20; ++t) {
            HForm f = rnd::integral_indefinite(rng, o, 3);
            c.expect(F_value(o, f, cusp_infinity(o)) == f.a, "F(inf) != a");
            c.expect(F_value(o, f, cusp_of(o, quat_zero(o.alg))) == f.c, "F(0) != c");
            for (const Quat& u : o.units)
                c.expect(F_value(o, f, cusp_of(o, u)) == f.a + trd(conj(u) * f.b) + f.c,
                         "unit cell value differs from f(u, 1)");
        }
    });
    detail::check(rep, "reported pairs obey the discriminant bound", [&](Checker& c) {
        rnd::Engine rng(seed + 61);
        for (int t = 0; t < 10; ++t) {
            HForm f = rnd::integral_indefinite(rng, o, 2);
            WaterworldReport w = extract(o, f, default_region(o));
            Rat bound = Rat(o.alg->disc) * w.delta;
            for (const auto* cells : {&w.certified, &w.candidates})
                for (const CellPair& p : *cells) {
                    c.expect(p.f_alpha * p.f_beta < 0, "pair without a sign change");
                    c.expect(-p.f_alpha * p.f_beta <= bound, "discriminant bound failed");
                }
            for (const auto& [cusp, val] : w.values)
                c.expect(rat_den(val) == 1, "F-value is not an integer");
        }
    });
    detail::check(rep, "progression maps reproduce F along the flooded cell", [&](Checker& c) {
        rnd::Engine rng(seed + 62);
        HForm tr{0, quat_one(o.alg), 0};
        auto maps = progression(o, tr, default_region(o));
        c.expect(!maps.empty() && maps.front().coset_rep.is_zero(), "integral coset missing");
        for (int i = 0; i < 50; ++i) {
            Quat u = rnd::order_elt(rng, o, 3);
            c.expect(maps.front().eval(u) == trd(conj(u)), "integral map differs");
        }
    });
    detail::check(rep, "reconstruction recovers 100 random forms", [&](Checker& c) {
        rnd::Engine rng(seed + 63);
        int done = 0;
        while (done < 100) {
            HForm f = rnd::integral_indefinite(rng, o, 4);
            std::vector<std::pair<Cusp, Rat>> samples;
            std::vector<Cusp> seen;
            while (samples.size() < 6) {
                Cusp p = rnd::cusp(rng, o, 2);
                bool dup = false;
                for (const Cusp& s : seen) dup = dup || s == p;
                if (dup) continue;
                seen.push_back(p);
                samples.emplace_back(p, F_value(o, f, p));
            }
            try {
                c.expect(reconstruct(o, samples) == f, "reconstructed form differs");
                ++done;
            } catch (const degenerate_configuration&) {
            }
        }
    });
    detail::check(rep, "degenerate six-cusp configurations are rejected", [&](Checker& c) {
        std::vector<std::pair<Cusp, Rat>> bad;
        bad.emplace_back(cusp_infinity(o), 1);
        for (int k = 0; k < 5; ++k) bad.emplace_back(cusp_of(o, quat_scalar(o.alg, k)), 1);
        bool threw = false;
        try {
            reconstruct(o, bad);
        } catch (const degenerate_configuration&) {
            threw = true;
        }
        c.expect(threw, "collinear cusps were not rejected");
    });
    return rep;
}

inline std::vector<std::string> suite_names() {
    return {"algebra", "ideals", "distances", "link2",
            "link3",   "groups", "appendixA", "waterworld"};
}

inline SuiteReport run_suite(const std::string& name, const OrderCtx& order, uint64_t seed) {
    if (name == "algebra") return suite_algebra(seed);
    if (name == "ideals") return suite_ideals(seed);
    if (name == "distances") return suite_distances(seed);
    if (name == "link2") return suite_link(order_preset("hurwitz"), seed);
    if (name == "link3") return suite_link(order_preset("da3"), seed);
    if (name == "groups") return suite_groups(seed);
    if (name == "appendixA") return suite_appendix(seed);
    if (name == "waterworld") return suite_waterworld(order, seed);
    throw usage_error("unknown suite: " + name);
}

} // namespace ww::verify
