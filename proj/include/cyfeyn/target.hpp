#pragma once

#include <array>

#include "cyfeyn/rational.hpp"

namespace cyfeyn {

// Constants identifying one of the three hypersurface targets:
// degree k in {6, 8, 10} inside a weighted projective P(weights).
struct TargetSpec {
    int k = 0;
    std::array<int, 5> weights{};
    Rat r;    // k^k / prod w_i^{w_i}
    Rat p_k;  // k / prod w_i
    Rat r0;
    Rat r1;
    Rat a0;
    Rat a1;
    long chi = 0;
};

inline constexpr std::array<int, 3> kSupportedTargets{6, 8, 10};

// Throws UnsupportedTarget unless k is one of the supported degrees.
TargetSpec make_target(int k);

} // namespace cyfeyn
