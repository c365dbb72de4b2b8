#pragma once

#include <json.hpp>

#include "ww/reference_data.hpp"
#include "ww/waterworld.hpp"

namespace ww {

using Json = nlohmann::json;

inline Json rat_json(const Rat& r) { return rat_str(r); }
inline Rat rat_from(const Json& j) { return parse_rat(j.get<std::string>()); }

inline Json quat_json(const Quat& q) {
    Json arr = Json::array();
    for (const Rat& c : q.c) arr.push_back(rat_str(c));
    return arr;
}

inline Quat quat_from(const AlgebraSpec* alg, const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw usage_error("quaternion JSON must be an array of four rationals");
    return {alg, rat_from(j[0]), rat_from(j[1]), rat_from(j[2]), rat_from(j[3])};
}

// {"a": "p/q", "b": ["p/q" x4], "c": "p/q", "basis": preset}
inline Json form_json(const OrderCtx& o, const HForm& f) {
    return {{"a", rat_json(f.a)}, {"b", quat_json(f.b)}, {"c", rat_json(f.c)},
            {"basis", o.name}};
}

inline HForm form_from(const OrderCtx& o, const Json& j) {
    if (j.contains("basis") && j["basis"].get<std::string>() != o.name)
        throw usage_error("form basis tag '" + j["basis"].get<std::string>() +
                          "' does not match order '" + o.name + "'");
    return {rat_from(j.at("a")), quat_from(o.alg, j.at("b")), rat_from(j.at("c"))};
}

inline Json cusp_json(const Cusp& c) {
    Json j;
    j["value"] = c.infinite ? Json("inf") : quat_json(c.alpha);
    j["rep"] = {{"x", quat_json(c.rep_x)}, {"y", quat_json(c.rep_y)}};
    return j;
}

inline Cusp cusp_from(const OrderCtx& o, const Json& j) {
    return canonicalize(o, quat_from(o.alg, j.at("rep").at("x")),
                        quat_from(o.alg, j.at("rep").at("y")));
}

inline Json region_json(const Region& r) {
    return {{"denominator_norm_max", r.denom_norm_max.str()},
            {"box_norm_sq", rat_json(r.box_nsq)}};
}

inline Region region_from(const Json& j) {
    return {Int(j.at("denominator_norm_max").get<std::string>()),
            rat_from(j.at("box_norm_sq"))};
}

inline Json cell_pair_json(const CellPair& p) {
    return {{"alpha", cusp_json(p.alpha)},   {"beta", cusp_json(p.beta)},
            {"F_alpha", rat_json(p.f_alpha)}, {"F_beta", rat_json(p.f_beta)},
            {"gap", rat_json(p.gap)}};
}

inline CellPair cell_pair_from(const OrderCtx& o, const Json& j) {
    return {cusp_from(o, j.at("alpha")), cusp_from(o, j.at("beta")),
            rat_from(j.at("F_alpha")), rat_from(j.at("F_beta")), rat_from(j.at("gap"))};
}

inline Json report_json(const OrderCtx& o, const WaterworldReport& rep) {
    Json j;
    j["preset"] = o.name;
    j["form"] = form_json(o, rep.form);
    j["region"] = region_json(rep.region);
    j["delta"] = rat_json(rep.delta);
    j["flooded"] = Json::array();
    for (const Cusp& c : rep.flooded) j["flooded"].push_back(cusp_json(c));
    j["certified_cells"] = Json::array();
    for (const CellPair& p : rep.certified) j["certified_cells"].push_back(cell_pair_json(p));
    j["candidate_cells"] = Json::array();
    for (const CellPair& p : rep.candidates) j["candidate_cells"].push_back(cell_pair_json(p));
    j["values"] = Json::array();
    for (const auto& [c, v] : rep.values)
        j["values"].push_back({{"cusp", cusp_json(c)}, {"F", rat_json(v)}});
    return j;
}

inline WaterworldReport report_from(const OrderCtx& o, const Json& j) {
    WaterworldReport rep{form_from(o, j.at("form")), region_from(j.at("region")),
                         rat_from(j.at("delta")), {}, {}, {}, {}};
    for (const Json& c : j.at("flooded")) rep.flooded.push_back(cusp_from(o, c));
    for (const Json& p : j.at("certified_cells")) rep.certified.push_back(cell_pair_from(o, p));
    for (const Json& p : j.at("candidate_cells"))
        rep.candidates.push_back(cell_pair_from(o, p));
    for (const Json& v : j.at("values"))
        rep.values.emplace_back(cusp_from(o, v.at("cusp")), rat_from(v.at("F")));
    return rep;
}

inline Json link_report_json(const LinkReport& rep) {
    Json j;
    j["vertex"] = {{"z", quat_json(rep.vertex.z)}, {"rsq", rat_json(rep.vertex.rsq)}};
    j["cusps"] = Json::array();
    for (const Cusp& c : rep.cusps) j["cusps"].push_back(cusp_json(c));
    j["edges"] = Json::array();
    for (const LinkEdge& e : rep.edges)
        j["edges"].push_back(
            {{"i", e.i},
             {"j", e.j},
             {"label", e.label == Tangency::TangentB1 ? "tangent" : "point_contact"}});
    j["top_cell_count"] = rep.top_cell_count;
    Json hist = Json::object();
    for (const auto& [deg, count] : rep.degree_histogram)
        hist[std::to_string(deg)] = count;
    j["degree_histogram"] = hist;
    return j;
}

} // namespace ww
