#include "ga3ph/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "ga3ph/errors.hpp"

namespace ga3ph {

namespace {

struct LoopParts {
  Multivector<Poly> npnc;  // n_p * n_c
  Multivector<Poly> d_pc;  // d_p*d_c*e0 + n_p*n_c
  Poly d_cl;               // scalar part of conj(d_pc)*d_pc
};

LoopParts loop_parts(const GaTf& plant, const GaTf& ctrl) {
  LoopParts lp;
  lp.npnc = plant.num() * ctrl.num();
  const Poly dpdc = plant.den() * ctrl.den();
  lp.d_pc = lp.npnc;
  lp.d_pc.c0 += dpdc;

  const Multivector<Poly> full = conjugate(lp.d_pc) * lp.d_pc;
  lp.d_cl = full.c0;

  // cnorm(e0 + G*C) identically zero: no closed loop exists
  double dscale = 0.0;
  for (const Poly* p : {&lp.d_pc.c0, &lp.d_pc.c1, &lp.d_pc.c2, &lp.d_pc.c12})
    dscale = std::max(dscale, p->max_abs_coeff());
  if (lp.d_cl.max_abs_coeff() <= 1e-12 * dscale * dscale)
    throw AlgebraicLoopError("e0 + G*C is a zero divisor; the loop is ill-posed");

  const double nonscal = std::max(
      {full.c1.max_abs_coeff(), full.c2.max_abs_coeff(), full.c12.max_abs_coeff()});
  if (!(nonscal <= 1e-10 * full.c0.max_abs_coeff()))
    throw Error("conj(d_pc)*d_pc is not a pure scalar; loop composition is inconsistent");
  return lp;
}

}  // namespace

GaTf closed_loop(const GaTf& plant, const GaTf& ctrl) {
  const LoopParts lp = loop_parts(plant, ctrl);
  return GaTf(lp.npnc * conjugate(lp.d_pc), lp.d_cl);
}

Poly char_poly(const GaTf& plant, const GaTf& ctrl) {
  return loop_parts(plant, ctrl).d_cl;
}

std::vector<std::complex<double>> minimal_poles(const GaTf& plant, const GaTf& ctrl) {
  const GaTf g = closed_loop(plant, ctrl);
  if (g.den().degree() < 1) return {};
  return poly_roots(g.den());
}

bool is_cl_stable(const GaTf& plant, const GaTf& ctrl) {
  return hurwitz_stable(char_poly(plant, ctrl));
}

ClosedLoopReport analyze_closed_loop(const GaTf& plant, const GaTf& ctrl) {
  const LoopParts lp = loop_parts(plant, ctrl);
  ClosedLoopReport rep;
  rep.g_cl = GaTf(lp.npnc * conjugate(lp.d_pc), lp.d_cl);
  rep.d_cl = lp.d_cl;
  if (rep.g_cl.den().degree() >= 1) rep.minimal_poles = poly_roots(rep.g_cl.den());
  rep.stable = hurwitz_stable(lp.d_cl);
  return rep;
}

}  // namespace ga3ph
