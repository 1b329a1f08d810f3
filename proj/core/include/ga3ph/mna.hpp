#pragma once

#include <array>

#include "ga3ph/netlist.hpp"
#include "ga3ph/ratfun.hpp"

namespace ga3ph {

/// Phase-domain 3x3 transfer matrix from the three declared source labels
/// (columns) to the three declared output node voltages (rows).
using TfMatrix3 = std::array<std::array<RatFun, 3>, 3>;

/// Assemble and solve the modified nodal analysis system over the rational
/// function field: R as conductance, L and C as admittance stamps, ideal V
/// sources in extended (branch-current) form. Gaussian elimination picks the
/// candidate pivot with nonzero numerator and lowest total degree. Throws
/// SingularError naming the elimination step when the system is singular.
TfMatrix3 mna_transfer(const Netlist& netlist);

}  // namespace ga3ph
