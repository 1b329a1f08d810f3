#pragma once

#include <complex>
#include <vector>

#include "ga3ph/gatf.hpp"

namespace ga3ph {

/// Closed-loop stability report for unity negative feedback around G*C.
struct ClosedLoopReport {
  GaTf g_cl;                                  // reduced closed-loop GA-TF
  Poly d_cl;                                  // unreduced characteristic polynomial
  std::vector<std::complex<double>> minimal_poles;  // poles after joint cancellation
  bool stable = false;                        // strict Hurwitz test on d_cl
};

/// Closed-loop GA-TF G*C*(e0 + G*C)^-1, computed as
/// n_p*n_c*conj(d_pc) / (conj(d_pc)*d_pc) with d_pc = d_p*d_c + n_p*n_c,
/// then canonically reduced. Multiplication order is G then C throughout.
/// Throws AlgebraicLoopError when cnorm(e0 + G*C) vanishes identically.
GaTf closed_loop(const GaTf& plant, const GaTf& ctrl);

/// The unreduced real characteristic polynomial conj(d_pc)*d_pc. The
/// non-scalar parts of the product are checked to vanish (< 1e-10 relative).
Poly char_poly(const GaTf& plant, const GaTf& ctrl);

/// Poles of the reduced closed loop (joint cancellation against d_cl).
std::vector<std::complex<double>> minimal_poles(const GaTf& plant, const GaTf& ctrl);

/// Strict Hurwitz classification of the unreduced d_cl (conservative,
/// faithful to the characteristic-polynomial criterion).
bool is_cl_stable(const GaTf& plant, const GaTf& ctrl);

/// All of the above in one pass.
ClosedLoopReport analyze_closed_loop(const GaTf& plant, const GaTf& ctrl);

}  // namespace ga3ph
