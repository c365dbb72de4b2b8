#pragma once

#include <map>
#include <set>

#include "ww/enumerate.hpp"

namespace ww {

// Vertices of the fundamental cell: the Voronoi-cell vertices of the order
// lattice lifted to the unit hemisphere n(z) + r^2 = 1.
inline std::vector<UHPoint> fundamental_vertices(const OrderCtx& o) {
    std::vector<UHPoint> out;
    if (o.name == "hurwitz") {
        Quat w0 = Quat(o.alg, Rat(1, 2), Rat(1, 2), 0, 0); // (1+i)/2
        for (const Quat& u : o.units) {
            Quat z = w0 * u;
            out.emplace_back(z, Rat(1, 2));
        }
    } else if (o.name == "da3") {
        // hexagonal Voronoi vertices in each of the two coordinate planes
        std::vector<std::array<Rat, 2>> hex = {
            {0, Rat(1, 3)},          {0, Rat(-1, 3)},         {Rat(1, 2), Rat(1, 6)},
            {Rat(1, 2), Rat(-1, 6)}, {Rat(-1, 2), Rat(1, 6)}, {Rat(-1, 2), Rat(-1, 6)}};
        for (const auto& v : hex)
            for (const auto& w : hex)
                out.emplace_back(Quat(o.alg, v[0], v[1], w[0], w[1]), Rat(1, 3));
    } else {
        throw usage_error("fundamental_vertices: unsupported preset " + o.name);
    }
    Rat expected = o.name == "hurwitz" ? Rat(1, 2) : Rat(2, 3);
    for (const auto& v : out)
        if (nrd(v.z) != expected || nrd(v.z) + v.rsq != 1)
            throw invariant_violation("fundamental vertex off the unit hemisphere");
    std::sort(out.begin(), out.end(), [](const UHPoint& a, const UHPoint& b) {
        return a.z < b.z;
    });
    return out;
}

struct LinkEdge {
    size_t i, j; // indices into LinkReport::cusps
    Tangency label;
};

struct LinkReport {
    UHPoint vertex;
    CuspSet cusps;
    std::vector<LinkEdge> edges; // TangentB1 and PointContactAtD pairs only
    size_t top_cell_count = 0;   // number of TangentB1 edges
    std::map<size_t, size_t> degree_histogram; // TangentB1 degree -> count
};

// Link of a spine vertex: incident Ford-Voronoi cells are the cusps on the
// boundary of the level-D_A horoballs through v; pairs are labelled by the
// horoball tangency test.  Checks the projection bound
// min(n(I_a), n(I_{a^{-1}})) >= 1/D_A on every cusp adjacent to both 0 and
// infinity.
inline LinkReport vertex_link(const OrderCtx& o, const UHPoint& v) {
    LinkReport rep{v, {}, {}, 0, {}};
    rep.cusps = cusps_at(o, {v, Rat(o.alg->disc), CuspQuery::Boundary});
    if (rep.cusps.size() < 6)
        throw not_a_vertex("only " + std::to_string(rep.cusps.size()) +
                           " incident cusps; not a spine vertex");
    std::vector<size_t> degree(rep.cusps.size(), 0);
    for (size_t i = 0; i < rep.cusps.size(); ++i)
        for (size_t j = i + 1; j < rep.cusps.size(); ++j) {
            Tangency t = tangency(rep.cusps[i], rep.cusps[j]);
            if (t == Tangency::Separated) continue;
            rep.edges.push_back({i, j, t});
            if (t == Tangency::TangentB1) {
                ++rep.top_cell_count;
                ++degree[i];
                ++degree[j];
            }
        }
    for (size_t d : degree) ++rep.degree_histogram[d];

    Cusp inf = cusp_infinity(o);
    Cusp zero = cusp_of(o, quat_zero(o.alg));
    if (cuspset_contains(rep.cusps, inf) && cuspset_contains(rep.cusps, zero)) {
        Rat lower = Rat(1, o.alg->disc);
        for (const Cusp& c : rep.cusps) {
            if (c.infinite || c.alpha.is_zero()) continue;
            if (tangency(c, inf) != Tangency::TangentB1 ||
                tangency(c, zero) != Tangency::TangentB1)
                continue;
            Cusp cinv = cusp_of(o, inverse(c.alpha));
            if (c.nI < lower || cinv.nI < lower)
                throw invariant_violation("edge cusp violates the 1/D_A ideal-norm bound");
        }
    }
    return rep;
}

// ---- generator words -------------------------------------------------------

struct GenToken {
    enum Kind { J, T, C } kind;
    Quat w;    // T only
    Quat u, v; // C only
};

struct GenWord {
    std::vector<GenToken> tokens;
    std::vector<Rat> c_norms; // n(c) across the euclidean recursion, strictly decreasing
};

inline Mat2 token_matrix(const OrderCtx& o, const GenToken& t) {
    switch (t.kind) {
        case GenToken::J: return mat_J(o.alg);
        case GenToken::T: return mat_T(t.w);
        default: return mat_C(t.u, t.v);
    }
}

inline Mat2 reassemble(const OrderCtx& o, const GenWord& word) {
    Mat2 m = mat_identity(o.alg);
    for (const GenToken& t : word.tokens) m = m * token_matrix(o, t);
    return m;
}

inline bool in_order(const OrderCtx& o, const Mat2& m) {
    return o.contains(m.a) && o.contains(m.b) && o.contains(m.c) && o.contains(m.d);
}

// Euclidean decomposition into J, T_w, C_{u,v}: while c != 0, divide a = wc + c'
// with n(c') < n(c) and peel T_w J; the tail C_{a,d} T_{a^{-1} b} closes it.
inline GenWord decompose(const OrderCtx& o, Mat2 m) {
    if (!in_order(o, m)) throw usage_error("decompose: entries not in the order");
    if (det2sq(m) != 1) throw usage_error("decompose: Dieudonne determinant is not 1");
    GenWord word;
    while (!m.c.is_zero()) {
        word.c_norms.push_back(nrd(m.c));
        Quat w = euclid_divide(o, m.a * inverse(m.c));
        Quat c_next = m.a - w * m.c;
        if (nrd(c_next) >= nrd(m.c))
            throw invariant_violation("euclidean step failed to decrease n(c)");
        if (!w.is_zero()) word.tokens.push_back({GenToken::T, w, {}, {}});
        word.tokens.push_back({GenToken::J, {}, {}, {}});
        m = Mat2{m.c, m.d, c_next, m.b - w * m.d};
    }
    if (!o.is_unit(m.a) || !o.is_unit(m.d))
        throw invariant_violation("triangular tail with non-unit diagonal");
    Quat shift = inverse(m.a) * m.b;
    if (!(m.a == quat_one(o.alg) && m.d == quat_one(o.alg)))
        word.tokens.push_back({GenToken::C, {}, m.a, m.d});
    if (!shift.is_zero()) word.tokens.push_back({GenToken::T, shift, {}, {}});
    return word;
}

// ---- finite matrix groups --------------------------------------------------

struct FiniteGroup {
    std::vector<Mat2> elements; // sorted
    size_t order_matrix = 0;
    size_t order_mod_center = 0; // identifying m with -m
};

inline size_t count_mod_center(const std::set<Mat2>& elems) {
    size_t n = 0;
    for (const Mat2& m : elems)
        if (!(-m < m)) ++n;
    return n;
}

inline FiniteGroup group_closure(const OrderCtx& o, std::vector<Mat2> gens, size_t cap) {
    for (const Mat2& g : gens)
        if (!in_order(o, g) || det2sq(g) != 1)
            throw usage_error("group_closure: generator not in SL2 of the order");
    size_t base = gens.size();
    for (size_t i = 0; i < base; ++i) gens.push_back(inverse(gens[i]));
    std::set<Mat2> elems;
    std::vector<Mat2> frontier{mat_identity(o.alg)};
    elems.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<Mat2> next;
        for (const Mat2& m : frontier)
            for (const Mat2& g : gens) {
                Mat2 p = m * g;
                if (elems.insert(p).second) {
                    if (elems.size() > cap)
                        throw not_closed_within_cap("group closure exceeded cap");
                    next.push_back(p);
                }
            }
        frontier = std::move(next);
    }
    FiniteGroup grp;
    grp.elements.assign(elems.begin(), elems.end());
    grp.order_matrix = elems.size();
    grp.order_mod_center = count_mod_center(elems);
    return grp;
}

// Stabilizer of the fundamental cell: all C_{a,d} and J C_{a,d} with unit
// diagonal.  Verified closed under the generating multiplications and to
// permute the fundamental vertices.
inline FiniteGroup stabilizer_of_sigma(const OrderCtx& o) {
    std::set<Mat2> elems;
    Mat2 J = mat_J(o.alg);
    for (const Quat& a : o.units)
        for (const Quat& d : o.units) {
            elems.insert(mat_C(a, d));
            elems.insert(J * mat_C(a, d));
        }
    for (const Mat2& m : elems) {
        if (!elems.count(inverse(m)))
            throw invariant_violation("stabilizer set not closed under inverse");
        if (!elems.count(m * J))
            throw invariant_violation("stabilizer set not closed under J");
    }
    std::vector<UHPoint> verts = fundamental_vertices(o);
    std::set<std::pair<Quat, Rat>> vert_keys;
    for (const auto& v : verts) vert_keys.insert({v.z, v.rsq});
    for (const Mat2& m : elems)
        for (const auto& v : verts) {
            UHPoint image = isometry(m, v);
            if (!vert_keys.count({image.z, image.rsq}))
                throw invariant_violation("stabilizer element does not permute the vertices");
        }
    FiniteGroup grp;
    grp.elements.assign(elems.begin(), elems.end());
    grp.order_matrix = elems.size();
    grp.order_mod_center = count_mod_center(elems);
    return grp;
}

struct ConjugateCheck {
    std::string generator;
    Mat2 conjugate;
    bool integral = false;
    bool det_one = false;
    bool pass() const { return integral && det_one; }
};

// Conjugates every generator J, T_{basis}, C_{u,v} by m and reports whether the
// result lands back in SL2 of the order.  Conjugation ignores real scalar
// factors, so any invertible m is accepted.
inline std::vector<ConjugateCheck> check_normalizer(const OrderCtx& o, const Mat2& m) {
    if (det2sq(m) == 0) throw usage_error("check_normalizer requires an invertible matrix");
    Mat2 minv = inverse(m);
    std::vector<std::pair<std::string, Mat2>> gens;
    gens.emplace_back("J", mat_J(o.alg));
    for (int i = 0; i < 4; ++i)
        gens.emplace_back("T_b" + std::to_string(i), mat_T(o.basis[i]));
    for (size_t i = 0; i < o.units.size(); ++i)
        for (size_t j = 0; j < o.units.size(); ++j)
            gens.emplace_back("C_" + std::to_string(i) + "_" + std::to_string(j),
                              mat_C(o.units[i], o.units[j]));
    std::vector<ConjugateCheck> out;
    out.reserve(gens.size());
    for (const auto& [name, g] : gens) {
        Mat2 conj_g = m * g * minv;
        out.push_back({name, conj_g, in_order(o, conj_g), det2sq(conj_g) == 1});
    }
    return out;
}

} // namespace ww
