#pragma once

#include <array>

#include "ga3ph/mna.hpp"
#include "ga3ph/models.hpp"

namespace ga3ph {

/// Amplitude-invariant Clarke matrix K (2x3) and its right inverse K+ (3x2),
/// beta axis proportional to (b - c). K annihilates the zero-sequence
/// (all-ones) direction and K * K+ = I exactly.
extern const std::array<std::array<double, 3>, 2> kClarke;
extern const std::array<std::array<double, 2>, 3> kClarkeInv;

/// Project a phase-domain 3x3 transfer matrix to the 2x2 alpha/beta model:
/// M_ab = K * M_abc * K+.
RealMimo2 clarke_project(const TfMatrix3& m3);

/// Sample-level transforms shared with the simulator.
std::array<double, 2> clarke(const std::array<double, 3>& abc);
std::array<double, 3> inv_clarke(const std::array<double, 2>& ab);

}  // namespace ga3ph
