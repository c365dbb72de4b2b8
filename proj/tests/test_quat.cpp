#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ww;

TEST_CASE("structure constants") {
    const AlgebraSpec* a = algebra_preset("hurwitz");
    Quat I = quat_basis(a, 1), J = quat_basis(a, 2), K = quat_basis(a, 3);
    REQUIRE(I * J == K);
    REQUIRE(J * I == -K);
    REQUIRE(I * I == quat_scalar(a, a->sc_i));
    REQUIRE(J * J == quat_scalar(a, a->sc_j));

    const AlgebraSpec* d = algebra_preset("da3");
    Quat Id = quat_basis(d, 1), Jd = quat_basis(d, 2);
    REQUIRE(Id * Id == quat_scalar(d, Rat(-3)));
    REQUIRE(Jd * Id == -(Id * Jd));
}

TEST_CASE("minimal polynomial of the half units") {
    Quat w = tt::omega();
    REQUIRE(trd(w) == 1);
    REQUIRE(nrd(w) == 1);
    REQUIRE(w * w == w - quat_one(w.alg));

    Quat r = tt::rho();
    REQUIRE(trd(r) == 1);
    REQUIRE(nrd(r) == 1);
    REQUIRE(r * r == r - quat_one(r.alg));
}

TEST_CASE("norm, trace, conjugate") {
    REQUIRE(nrd(tt::hq(1, 0, 0, 0)) == 1);
    REQUIRE(trd(tt::hq(1, 0, 0, 0)) == 2);
    REQUIRE(conj(tt::omega()) == quat_one(tt::H().alg) - tt::omega());
    REQUIRE(nrd(tt::z0()) == Rat(2, 3));
    // z0 = (j + rho)(1 + rho)^{-1}
    Quat j = tt::dq(0, 0, 1, 0);
    REQUIRE(rdiv(j + tt::rho(), quat_one(tt::D3().alg) + tt::rho()) == tt::z0());
}

TEST_CASE("norm multiplicativity and trace symmetry") {
    tt::Rng rng(11);
    const AlgebraSpec* a = algebra_preset("hurwitz");
    const AlgebraSpec* d = algebra_preset("da3");
    for (int i = 0; i < 1000; ++i) {
        const AlgebraSpec* alg = (i % 2) ? a : d;
        Quat x = tt::rand_quat(rng, alg, 5, 4);
        Quat y = tt::rand_quat(rng, alg, 5, 4);
        REQUIRE(nrd(x * y) == nrd(x) * nrd(y));
        REQUIRE(trd(x * y) == trd(y * x));
        REQUIRE(x * conj(x) == quat_scalar(alg, nrd(x)));
        REQUIRE(conj(x) == quat_scalar(alg, trd(x)) - x);
    }
}

TEST_CASE("mixed algebras are rejected") {
    Quat x = tt::hq(1, 0, 0, 0);
    Quat y = tt::dq(1, 0, 0, 0);
    REQUIRE_THROWS_AS(x * y, usage_error);
}

TEST_CASE("det2sq basics") {
    const AlgebraSpec* a = algebra_preset("hurwitz");
    REQUIRE(det2sq(mat_identity(a)) == 1);
    REQUIRE(det2sq(mat_J(a)) == 1);

    // the inversion matrix through the da3 vertex has Dieudonne determinant 3
    Mat2 m = tt::vertex_inversion();
    REQUIRE(det2sq(m) == 9);
    REQUIRE(det2sq_via_c(m) == 9);
}

TEST_CASE("det2sq is multiplicative, adjoint-invariant, matches the c-form") {
    tt::Rng rng(12);
    const AlgebraSpec* a = algebra_preset("da3");
    for (int i = 0; i < 300; ++i) {
        Mat2 m{tt::rand_quat(rng, a, 3, 2), tt::rand_quat(rng, a, 3, 2),
               tt::rand_quat(rng, a, 3, 2), tt::rand_quat(rng, a, 3, 2)};
        Mat2 n{tt::rand_quat(rng, a, 3, 2), tt::rand_quat(rng, a, 3, 2),
               tt::rand_quat(rng, a, 3, 2), tt::rand_quat(rng, a, 3, 2)};
        REQUIRE(det2sq(m * n) == det2sq(m) * det2sq(n));
        REQUIRE(det2sq(adjoint(m)) == det2sq(m));
        if (!m.c.is_zero()) REQUIRE(det2sq_via_c(m) == det2sq(m));
        if (det2sq(m) != 0) {
            Mat2 id = m * inverse(m);
            REQUIRE(id == mat_identity(a));
        }
    }
}

TEST_CASE("homography branches") {
    const AlgebraSpec* a = algebra_preset("hurwitz");
    // pole branch
    REQUIRE(!mobius(mat_J(a), std::optional<Quat>(quat_zero(a))).has_value());
    // translation fixes infinity
    REQUIRE(!mobius(mat_T(quat_one(a)), std::nullopt).has_value());
    // z = infinity with c != 0
    Mat2 g{quat_zero(a), quat_one(a), -quat_one(a), quat_one(a)};
    auto img = mobius(g, std::nullopt);
    REQUIRE(img.has_value());
    REQUIRE(img->is_zero());
}

TEST_CASE("inversion through the da3 vertex maps the duoprism vertices to the listed set") {
    Mat2 m = tt::vertex_inversion();
    auto v33 = tt::V33();
    auto expected = tt::gV33();
    std::vector<Quat> images;
    for (const Quat& v : v33) {
        auto img = mobius(m, std::optional<Quat>(v));
        REQUIRE(img.has_value());
        images.push_back(*img);
    }
    std::sort(images.begin(), images.end());
    std::sort(expected.begin(), expected.end());
    REQUIRE(images == expected);
    // spot values: g(0) and g(1)
    auto g0 = mobius(m, std::optional<Quat>(quat_zero(m.a.alg)));
    REQUIRE(*g0 == tt::dord(0, 1, 1, 1) / Rat(2)); // (rho + j + rho j)/2
    auto g1 = mobius(m, std::optional<Quat>(quat_one(m.a.alg)));
    REQUIRE(*g1 == tt::dord(1, 1, 1, 1) / Rat(2)); // (1 + rho + j + rho j)/2
}

TEST_CASE("homography is a left action") {
    tt::Rng rng(13);
    const OrderCtx& o = tt::H();
    for (int i = 0; i < 200; ++i) {
        Mat2 g = tt::rand_sl2o(rng, o, 6);
        Mat2 h = tt::rand_sl2o(rng, o, 6);
        std::optional<Quat> p;
        if (tt::rand_int(rng, 0, 4) != 0) p = tt::rand_quat(rng, o.alg, 3, 3);
        auto lhs = mobius(g * h, p);
        auto rhs = mobius(g, mobius(h, p));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("isometry basics") {
    const AlgebraSpec* a = algebra_preset("hurwitz");
    UHPoint x{tt::hq(2, -1, 0, 3), Rat(7, 2)};
    // translations shift z and keep r^2
    Quat w = tt::hq(1, 1, 0, 0);
    UHPoint tx = isometry(mat_T(w), x);
    REQUIRE(tx.z == x.z + w);
    REQUIRE(tx.rsq == x.rsq);
    // J fixes (0, 1)
    UHPoint origin{quat_zero(a), 1};
    REQUIRE(isometry(mat_J(a), origin) == origin);
    // non-unimodular matrices are rejected
    Mat2 two = mat_C(quat_scalar(a, 2), quat_one(a));
    REQUIRE_THROWS_AS(isometry(two, x), usage_error);
}

TEST_CASE("da3 vertex stabilizer generators fix the vertex") {
    UHPoint v0 = tt::v0_da3();
    for (const Mat2& g : {tt::g_inf_1(), tt::g_inf_2(), tt::h_inf()}) {
        REQUIRE(det2sq(g) == 1);
        REQUIRE(isometry(g, v0) == v0);
        // they fix z0 and infinity on the boundary
        auto img = mobius(g, std::optional<Quat>(tt::z0()));
        REQUIRE(*img == tt::z0());
        REQUIRE(!mobius(g, std::nullopt).has_value());
    }
    // the GL2 inversion also fixes the vertex
    REQUIRE(isometry_gl(tt::vertex_inversion(), v0) == v0);
}

TEST_CASE("isometry is a left action") {
    tt::Rng rng(14);
    const OrderCtx& o = tt::D3();
    for (int i = 0; i < 200; ++i) {
        Mat2 g = tt::rand_sl2o(rng, o, 5);
        Mat2 h = tt::rand_sl2o(rng, o, 5);
        UHPoint x = tt::rand_point(rng, o.alg, 3, 3);
        REQUIRE(isometry(g * h, x) == isometry(g, isometry(h, x)));
    }
}

TEST_CASE("two-point distance identity") {
    tt::Rng rng(15);
    for (const OrderCtx* o : {&tt::H(), &tt::D3()}) {
        int checked = 0;
        while (checked < 200) {
            Mat2 g = tt::rand_sl2o(rng, *o, 6);
            Quat z = tt::rand_quat(rng, o->alg, 3, 3);
            Quat w = tt::rand_quat(rng, o->alg, 3, 3);
            Quat dz = g.c * z + g.d;
            Quat dw = g.c * w + g.d;
            if (dz.is_zero() || dw.is_zero()) continue;
            auto gz = mobius(g, std::optional<Quat>(z));
            auto gw = mobius(g, std::optional<Quat>(w));
            REQUIRE(nrd(*gz - *gw) * nrd(dz) * nrd(dw) == nrd(z - w));
            ++checked;
        }
    }
}
