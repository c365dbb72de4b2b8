#pragma once

#include <deque>
#include <mutex>
#include <string>
#include <string_view>

#include "ww/rational.hpp"

namespace ww {

// A definite quaternion algebra over Q in the basis (1, I, J, IJ) with
// I^2 = sc_i < 0, J^2 = sc_j < 0, JI = -IJ.  disc is the reduced discriminant.
struct AlgebraSpec {
    Rat sc_i;
    Rat sc_j;
    int disc = 0;
    std::string name;
};

namespace detail {
inline const AlgebraSpec* intern_algebra(AlgebraSpec spec) {
    if (spec.sc_i >= 0 || spec.sc_j >= 0)
        throw usage_error("algebra must be definite: sc_i, sc_j < 0");
    static std::deque<AlgebraSpec> pool;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& a : pool)
        if (a.sc_i == spec.sc_i && a.sc_j == spec.sc_j && a.disc == spec.disc &&
            a.name == spec.name)
            return &a;
    pool.push_back(std::move(spec));
    return &pool.back();
}
} // namespace detail

// Shipped presets: "hurwitz" is (-1,-1)/Q with disc 2, "da3" is (-3,-1)/Q with
// disc 3 (basis I plays the role of i*sqrt(3) under the real embedding).
inline const AlgebraSpec* algebra_preset(std::string_view name) {
    if (name == "hurwitz")
        return detail::intern_algebra({Rat(-1), Rat(-1), 2, "hurwitz"});
    if (name == "da3")
        return detail::intern_algebra({Rat(-3), Rat(-1), 3, "da3"});
    throw usage_error("unknown algebra preset: " + std::string(name));
}

} // namespace ww
