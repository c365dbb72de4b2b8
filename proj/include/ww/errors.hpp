#pragma once

#include <stdexcept>

namespace ww {

// Caller passed arguments outside an operation's contract.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Data failed a structural check that valid inputs can never fail
// (non-square ideal index, horoball gap below 1, ...).
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// Sample cusps lie on a common projective real hyperplane.
struct degenerate_configuration : usage_error {
    using usage_error::usage_error;
};

// Fewer than six Ford-Voronoi cells meet at the queried point.
struct not_a_vertex : usage_error {
    using usage_error::usage_error;
};

// Group closure exceeded the element cap without stabilizing.
struct not_closed_within_cap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ww
