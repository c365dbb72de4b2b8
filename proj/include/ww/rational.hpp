#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <string>

#include "ww/errors.hpp"

namespace ww {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

// b > 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }
inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }
inline Int round_half_up(const Rat& r) { return floor_rat(r + Rat(1, 2)); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw usage_error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

// sqrt of a nonnegative rational when it is rational, else nullopt
inline std::optional<Rat> sqrt_exact(const Rat& w) {
    if (w < 0) return std::nullopt;
    Int p, q;
    if (!is_perfect_square(rat_num(w), &p)) return std::nullopt;
    if (!is_perfect_square(rat_den(w), &q)) return std::nullopt;
    return Rat(p, q);
}

// Tight rational upper bound for sqrt(w), w >= 0: (w + t^2)/(2t) >= sqrt(w) for any t > 0.
inline Rat sqrt_upper(const Rat& w) {
    if (w < 0) throw usage_error("sqrt_upper: negative argument");
    if (w == 0) return 0;
    double a = std::sqrt(to_double(w));
    Rat t = (std::isfinite(a) && a > 0) ? Rat(Int(a * 1048576.0) + 1, 1048576) : (w + 1) / 2;
    if (t <= 0) t = (w + 1) / 2;
    return (w + t * t) / (2 * t);
}

// floor(c + sqrt(w)) for rational c and w >= 0, exact
inline Int floor_plus_sqrt(const Rat& c, const Rat& w) {
    if (w < 0) throw usage_error("floor_plus_sqrt: negative radicand");
    double approx = to_double(c) + std::sqrt(to_double(w));
    Int m = std::isfinite(approx) ? Int(std::floor(approx)) : floor_rat(c);
    auto below = [&](const Int& k) {
        Rat d = Rat(k) - c;
        return d <= 0 || d * d <= w;
    };
    while (!below(m)) --m;
    while (below(m + 1)) ++m;
    return m;
}

// ceil(c - sqrt(w))
inline Int ceil_minus_sqrt(const Rat& c, const Rat& w) { return -floor_plus_sqrt(-c, w); }

inline std::string rat_str(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw usage_error("parse_rat: zero denominator in '" + s + "'");
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw usage_error("parse_rat: malformed rational '" + s + "'");
    }
}

} // namespace ww
