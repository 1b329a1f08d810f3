#pragma once

#include "ga3ph/gatf.hpp"
#include "ga3ph/multivector.hpp"
#include "ga3ph/ratfun.hpp"

namespace ga3ph {

/// Series R-L three-phase circuit parameters (Example-1 values: L = 3 mH,
/// Lu = 30 mH, R = 22 ohm). All strictly positive.
struct CircuitParams {
  double L;   // line inductance, henry
  double Lu;  // unbalanced-phase inductance, henry
  double R;   // load resistance, ohm

  void validate() const;
};

/// 2x2 real-valued MIMO plant in the alpha/beta frame,
/// y = [[ga, gb], [gc, gd]] * u.
struct RealMimo2 {
  RatFun ga, gb, gc, gd;
};

/// Complex-valued SISO pair: y = G1*u + G2*conj(u), with G1, G2 stored as
/// (real, imaginary) rational-function parts. Balanced systems have G2 == 0.
struct ComplexSiso {
  RatFun g1_re, g1_im;
  RatFun g2_re, g2_im;
};

/// GA-valued SISO plant: a single GA transfer function.
struct GaSiso {
  GaTf g;
};

/// Closed-form alpha/beta model of the series R-L circuit. Balanced gives
/// diag(R/(Lp+R)); unbalanced the full coupled matrix over
/// d(p) = 2(R+Lp)(3R+(L+2Lu)p).
RealMimo2 build_rl_model(const CircuitParams& params, bool balanced);

/// Complex representation: G1 = (Ga+Gd)/2 + j(-Gb+Gc)/2,
/// G2 = (Ga-Gd)/2 + j(Gb+Gc)/2.
ComplexSiso real_to_complex(const RealMimo2& m);
RealMimo2 complex_to_real(const ComplexSiso& c);

/// GA representation by the direct coefficient map
/// g0 = (Ga+Gd)/2, g1 = (Ga-Gd)/2, g2 = (Gb+Gc)/2, g12 = (Gb-Gc)/2
/// (the inverse of the 2x2 matrix isomorphism, applied entrywise).
GaSiso real_to_ga(const RealMimo2& m);
RealMimo2 ga_to_real(const GaSiso& g);

/// The transformation matrix of multivector constants,
/// T = 1/2 [[e0+e1, -e2+e12], [-e2-e12, e0-e1]]; involutive under the
/// gp-matrix product.
Mat2<Multivector<double>> tg_matrix();

/// gp-matrix product of 2x2 multivector matrices over RatFun coefficients.
Mat2<Multivector<RatFun>> mvmat2_mul(const Mat2<Multivector<RatFun>>& a,
                                     const Mat2<Multivector<RatFun>>& b);

/// T * M * T with the real plant entries lifted to scalar multivectors.
/// Diagonal with equal diagonal entries for every real matrix M.
Mat2<Multivector<RatFun>> conjugate_by_tg(const RealMimo2& m);

/// Channel decoupling test: gb, gc vanish and ga == gd (relative tolerance
/// 1e-9 against the largest numerator coefficient).
bool is_balanced(const RealMimo2& m, double rel_tol = 1e-9);
/// GA criterion: the e1 and e2 coefficients vanish.
bool is_balanced(const GaSiso& g, double rel_tol = 1e-9);

}  // namespace ga3ph
