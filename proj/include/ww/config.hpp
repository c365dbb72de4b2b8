#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "ww/order.hpp"

namespace ww {

using KeyValues = std::map<std::string, std::string>;

// simple "key = value" lines; '#' starts a comment
inline KeyValues parse_key_values(std::istream& in) {
    KeyValues kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }
    return kv;
}

inline KeyValues load_key_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open config file " + path);
    return parse_key_values(in);
}

// Order description: sc_i, sc_j, disc, name, and basis0..basis3 as four
// space-separated rationals in the algebra basis (1, I, J, IJ).
inline OrderCtx order_from_config(const KeyValues& kv) {
    auto get = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw usage_error("order config is missing '" + key + "'");
        return it->second;
    };
    AlgebraSpec spec;
    spec.sc_i = parse_rat(get("sc_i"));
    spec.sc_j = parse_rat(get("sc_j"));
    spec.disc = static_cast<int>(Int(get("disc")).convert_to<long>());
    spec.name = get("name");
    const AlgebraSpec* alg = detail::intern_algebra(spec);
    std::array<Quat, 4> basis;
    for (int i = 0; i < 4; ++i) {
        std::istringstream row(get("basis" + std::to_string(i)));
        std::array<Rat, 4> c;
        for (auto& v : c) {
            std::string tok;
            if (!(row >> tok)) throw usage_error("basis row needs four rationals");
            v = parse_rat(tok);
        }
        basis[i] = Quat(alg, c[0], c[1], c[2], c[3]);
    }
    return make_order(alg, basis, spec.name);
}

inline OrderCtx load_order_file(const std::string& path) {
    return order_from_config(load_key_values(path));
}

} // namespace ww
