#pragma once

#include <optional>
#include <string>

#include "ga3ph/gatf.hpp"
#include "ga3ph/ratfun.hpp"

namespace ga3ph {

/// Youla parameter: a GA-TF whose coefficients must be stable and proper.
struct QParam {
  GaTf q;
};

/// Admissibility diagnostics for a Q parameter.
struct AdmissibilityReport {
  bool admissible = false;
  bool denominator_hurwitz = false;
  bool all_proper = false;
  std::string detail;  // offending pole / entry when not admissible
};

AdmissibilityReport q_admissible(const QParam& q);

/// Stabilizing controller C = (e0 - Q*G)^-1 * Q for an open-loop stable
/// plant. Throws PlantNotStableError, QNotAdmissibleError or
/// AlgebraicLoopError.
GaTf youla_controller(const GaTf& plant, const QParam& q);

/// Decoupling parameter Q = q0 * conj(G) / g0 with q0 in {+1, -1} chosen so
/// the resulting closed loop Q*G has positive DC gain. Q*G collapses to the
/// scalar cnorm(G)/g0, which is what diagonalizes the real closed loop.
/// Throws DegeneratePlantError when g0 is identically zero and
/// QNotAdmissibleError when the construction is not admissible.
QParam decoupling_q(const GaTf& plant);

/// Result of mapping a closed loop back to the real 2x2 matrix.
struct DecouplingReport {
  double offdiag_residual = 0.0;   // off-diagonal / diagonal coefficient ratio
  std::optional<RatFun> diag;      // shared diagonal entry; present only when
                                   // the loop is decoupled
};

/// Verify that plant/controller close into a diagonal real MIMO loop. The
/// residual is always reported; the shared diagonal is extracted only when
/// the off-diagonals vanish, and a decoupled loop whose two diagonal entries
/// disagree (> 1e-8) raises NotSymmetricError.
DecouplingReport verify_decoupled(const GaTf& plant, const GaTf& ctrl);

}  // namespace ga3ph
