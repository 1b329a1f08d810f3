#pragma once

#include <iosfwd>

#include "ga3ph/sim.hpp"

namespace ga3ph::cli {

/// Minimal two-axes SVG line plot of a simulation trace: alpha channel on
/// top (reference vs output), beta channel below. Deterministic bytes for a
/// given trace.
void write_svg(const SimTrace& trace, std::ostream& os);

}  // namespace ga3ph::cli
