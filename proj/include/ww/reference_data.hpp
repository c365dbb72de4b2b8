#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ww/spine.hpp"

// Reference configurations of the two shipped orders: the distinguished
// fundamental vertex, its incident cusps, the point-contact pairs, the vertex
// inversion of the disc-3 order with its normalizer conjugates, and the vertex
// stabilizer generators.  These are the frozen expected values the
// verification suites compare against.
namespace ww::ref {

struct LinkCounts {
    size_t cusps;
    size_t contact_pairs;
    size_t top_cells;
    size_t degree;
    size_t stabilizer_matrices; // |{C_{a,d}, J C_{a,d}}|
};

inline LinkCounts link_counts(const OrderCtx& o) {
    if (o.name == "hurwitz") return {10, 5, 40, 8, 1152};
    if (o.name == "da3") return {20, 10, 90, 9, 288};
    throw usage_error("no reference data for preset " + o.name);
}

inline UHPoint fundamental_vertex(const OrderCtx& o) {
    if (o.name == "hurwitz")
        return {Quat(o.alg, Rat(1, 2), Rat(1, 2), 0, 0), Rat(1, 2)};
    if (o.name == "da3")
        return {Quat(o.alg, Rat(1, 2), Rat(1, 6), Rat(1, 2), Rat(1, 6)), Rat(1, 3)};
    throw usage_error("no reference data for preset " + o.name);
}

namespace detail {
inline Quat oc(const OrderCtx& o, int p0, int p1, int p2, int p3) {
    return o.from_int_coords({p0, p1, p2, p3});
}
} // namespace detail

// the nine integral vertices of the fundamental duoprism of the disc-3 order
inline std::vector<Quat> duoprism_vertices(const OrderCtx& o) {
    using detail::oc;
    return {oc(o, 0, 0, 0, 0), oc(o, 1, 0, 0, 0), oc(o, 0, 0, 1, 0),
            oc(o, 1, 0, 1, 0), oc(o, 0, 1, 0, 0), oc(o, 0, 0, 0, 1),
            oc(o, 1, 0, 0, 1), oc(o, 0, 1, 1, 0), oc(o, 0, 1, 0, 1)};
}

// their images under the inversion through the fundamental vertex
inline std::vector<Quat> inverted_duoprism_vertices(const OrderCtx& o) {
    using detail::oc;
    std::vector<Quat> out;
    int pats[9][4] = {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0},
                      {0, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1},
                      {1, 1, 1, 0}, {1, 1, 0, 1}, {1, 1, 1, 1}};
    for (auto& p : pats) out.push_back(oc(o, p[0], p[1], p[2], p[3]) / Rat(2));
    return out;
}

// expected incident cusps of the fundamental vertex (nullopt = infinity)
inline std::vector<std::optional<Quat>> link_cusp_values(const OrderCtx& o) {
    std::vector<std::optional<Quat>> vals;
    vals.push_back(std::nullopt);
    if (o.name == "hurwitz") {
        const AlgebraSpec* a = o.alg;
        vals.push_back(Quat(a, 0, 0, 0, 0));
        vals.push_back(Quat(a, 1, 0, 0, 0));
        vals.push_back(Quat(a, 0, 1, 0, 0));
        vals.push_back(Quat(a, 1, 1, 0, 0));
        vals.push_back(Quat(a, Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)));
        vals.push_back(Quat(a, Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(-1, 2)));
        vals.push_back(Quat(a, Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(1, 2)));
        vals.push_back(Quat(a, Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2)));
        vals.push_back(Quat(a, Rat(1, 2), Rat(1, 2), 0, 0));
        return vals;
    }
    if (o.name == "da3") {
        for (const Quat& q : duoprism_vertices(o)) vals.push_back(q);
        for (const Quat& q : inverted_duoprism_vertices(o)) vals.push_back(q);
        vals.push_back(fundamental_vertex(o).z);
        return vals;
    }
    throw usage_error("no reference data for preset " + o.name);
}

// the pairs whose level-sqrt(D_A) horoballs meet exactly at the vertex
inline std::vector<std::pair<std::optional<Quat>, std::optional<Quat>>> contact_pair_values(
    const OrderCtx& o) {
    using detail::oc;
    std::vector<std::pair<std::optional<Quat>, std::optional<Quat>>> out;
    if (o.name == "hurwitz") {
        const AlgebraSpec* a = o.alg;
        out.emplace_back(std::nullopt, Quat(a, Rat(1, 2), Rat(1, 2), 0, 0));
        out.emplace_back(Quat(a, 0, 0, 0, 0), Quat(a, 1, 1, 0, 0));
        out.emplace_back(Quat(a, 1, 0, 0, 0), Quat(a, 0, 1, 0, 0));
        out.emplace_back(Quat(a, Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)),
                         Quat(a, Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2)));
        out.emplace_back(Quat(a, Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(-1, 2)),
                         Quat(a, Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(1, 2)));
        return out;
    }
    if (o.name == "da3") {
        auto half = [](const Quat& q) { return q / Rat(2); };
        out.emplace_back(std::nullopt, fundamental_vertex(o).z);
        out.emplace_back(oc(o, 0, 0, 0, 0), half(oc(o, 1, 1, 1, 1)));
        out.emplace_back(oc(o, 1, 0, 0, 0), half(oc(o, 0, 1, 1, 1)));
        out.emplace_back(oc(o, 0, 1, 0, 0), half(oc(o, 1, 0, 1, 1)));
        out.emplace_back(oc(o, 0, 0, 1, 0), half(oc(o, 1, 1, 0, 1)));
        out.emplace_back(oc(o, 1, 0, 1, 0), half(oc(o, 0, 1, 0, 1)));
        out.emplace_back(oc(o, 1, 0, 0, 1), half(oc(o, 0, 1, 1, 0)));
        out.emplace_back(oc(o, 0, 0, 0, 1), half(oc(o, 1, 1, 1, 0)));
        out.emplace_back(oc(o, 0, 1, 1, 0), half(oc(o, 1, 0, 0, 1)));
        out.emplace_back(oc(o, 0, 1, 0, 1), half(oc(o, 1, 0, 1, 0)));
        return out;
    }
    throw usage_error("no reference data for preset " + o.name);
}

// ---- disc-3 vertex stabilizer machinery ----

// inversion through the fundamental vertex: ((3 z0, 3 - 3 z0), (3, -3 z0)),
// an element of GL2 with Dieudonne determinant 3 normalizing SL2 of the order
inline Mat2 vertex_inversion(const OrderCtx& o) {
    if (o.name != "da3") throw usage_error("vertex inversion shipped for da3 only");
    Quat t = detail::oc(o, 1, 1, 1, 1); // 3 z0
    return {t, quat_scalar(o.alg, 3) - t, quat_scalar(o.alg, 3), -t};
}

// its conjugates of the standard generators, frozen entry by entry
inline std::vector<std::pair<std::string, std::pair<Mat2, Mat2>>> inversion_conjugates(
    const OrderCtx& o) {
    if (o.name != "da3") throw usage_error("inversion conjugates shipped for da3 only");
    using detail::oc;
    const AlgebraSpec* a = o.alg;
    Quat rho = oc(o, 0, 1, 0, 0), j = oc(o, 0, 0, 1, 0), rhoj = oc(o, 0, 0, 0, 1);
    auto m = [&](std::array<std::array<int, 4>, 4> rows) {
        return Mat2{oc(o, rows[0][0], rows[0][1], rows[0][2], rows[0][3]),
                    oc(o, rows[1][0], rows[1][1], rows[1][2], rows[1][3]),
                    oc(o, rows[2][0], rows[2][1], rows[2][2], rows[2][3]),
                    oc(o, rows[3][0], rows[3][1], rows[3][2], rows[3][3])};
    };
    std::vector<std::pair<std::string, std::pair<Mat2, Mat2>>> out;
    out.emplace_back("J", std::make_pair(mat_J(a), m({{{3, 1, 1, 1},
                                                       {1, -2, -2, -2},
                                                       {4, -1, -1, -1},
                                                       {-3, -1, -1, -1}}})));
    out.emplace_back("T_1", std::make_pair(mat_T(quat_one(a)), m({{{2, 1, 1, 1},
                                                                   {1, -1, -1, -1},
                                                                   {3, 0, 0, 0},
                                                                   {0, -1, -1, -1}}})));
    out.emplace_back("T_j", std::make_pair(mat_T(j), m({{{0, -1, 1, 1},
                                                         {1, 1, -1, 1},
                                                         {0, 0, 3, 0},
                                                         {3, -1, -2, 1}}})));
    out.emplace_back("T_rho", std::make_pair(mat_T(rho), m({{{0, 2, 2, -1},
                                                             {2, -2, 0, 0},
                                                             {0, 3, 0, 0},
                                                             {2, -2, 1, -2}}})));
    out.emplace_back("T_rhoj", std::make_pair(mat_T(rhoj), m({{{-1, 1, -1, 2},
                                                               {1, 1, 1, -1},
                                                               {0, 0, 0, 3},
                                                               {2, 1, -1, -1}}})));
    out.emplace_back("C_1_-1",
                     std::make_pair(mat_C(quat_one(a), -quat_one(a)), m({{{-3, 2, 2, 2},
                                                                          {4, 0, 0, 0},
                                                                          {2, 2, 2, 2},
                                                                          {3, -2, -2, -2}}})));
    out.emplace_back("C_1_j", std::make_pair(mat_C(quat_one(a), j), m({{{0, 2, 3, 0},
                                                                        {3, -2, -1, 0},
                                                                        {2, 2, 0, 0},
                                                                        {1, -2, 0, -2}}})));
    out.emplace_back("C_1_rho", std::make_pair(mat_C(quat_one(a), rho), m({{{0, 2, -1, 2},
                                                                            {1, 0, 1, -2},
                                                                            {2, -1, -1, 2},
                                                                            {0, 1, -1, -1}}})));
    return out;
}

// generators of the stabilizer of the fundamental vertex inside SL2(O), disc 3:
// two commuting order-3 grid translations, a flip inverting them, and a corner
// rotation moving infinity into the duoprism
inline Mat2 grid_gen_1(const OrderCtx& o) {
    Quat rho = detail::oc(o, 0, 1, 0, 0);
    return {rho, conj(rho), quat_zero(o.alg), conj(rho)}; // z -> rho z rho + 1
}
inline Mat2 grid_gen_2(const OrderCtx& o) {
    Quat rho = detail::oc(o, 0, 1, 0, 0), j = detail::oc(o, 0, 0, 1, 0);
    return {rho, j * rho, quat_zero(o.alg), rho}; // z -> rho z rho^{-1} + j
}
inline Mat2 flip_gen(const OrderCtx& o) {
    Quat rhoj = detail::oc(o, 0, 0, 0, 1), j = detail::oc(o, 0, 0, 1, 0);
    return {rhoj, quat_zero(o.alg), quat_zero(o.alg), j}; // z -> -rho j z j
}
inline Mat2 corner_gen(const OrderCtx& o) {
    return {quat_zero(o.alg), quat_one(o.alg), -quat_one(o.alg),
            quat_one(o.alg)}; // z -> (1 - z)^{-1}
}

} // namespace ww::ref
