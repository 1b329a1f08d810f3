#include "ga3ph/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "ga3ph/analysis.hpp"
#include "ga3ph/errors.hpp"

namespace ga3ph {

AdmissibilityReport q_admissible(const QParam& q) {
  AdmissibilityReport rep;
  std::ostringstream detail;

  if (q.q.is_zero()) {
    rep.denominator_hurwitz = true;
    rep.all_proper = true;
    rep.admissible = true;
    return rep;
  }

  rep.denominator_hurwitz =
      q.q.den().degree() == 0 || hurwitz_stable(q.q.den());
  if (!rep.denominator_hurwitz) {
    detail << "denominator is not Hurwitz:";
    for (const auto& r : poly_roots(q.q.den()))
      if (r.real() >= 0.0) detail << " pole " << r.real() << (r.imag() >= 0 ? "+" : "")
                                  << r.imag() << "j";
  }

  static const char* names[4] = {"q0", "q1", "q2", "q3"};
  rep.all_proper = true;
  const std::array<const Poly*, 4> nums = {&q.q.num().c0, &q.q.num().c1,
                                           &q.q.num().c2, &q.q.num().c12};
  for (int k = 0; k < 4; ++k) {
    const Poly& n = *nums[static_cast<size_t>(k)];
    if (!n.is_zero() && n.degree() > q.q.den().degree()) {
      rep.all_proper = false;
      detail << (detail.str().empty() ? "" : "; ") << names[k]
             << " improper (numerator degree " << n.degree()
             << " > denominator degree " << q.q.den().degree() << ")";
    }
  }
  rep.admissible = rep.denominator_hurwitz && rep.all_proper;
  rep.detail = detail.str();
  return rep;
}

GaTf youla_controller(const GaTf& plant, const QParam& q) {
  if (plant.den().degree() >= 1 && !hurwitz_stable(plant.den()))
    throw PlantNotStableError(
        "Youla construction requires an open-loop stable plant");
  const AdmissibilityReport rep = q_admissible(q);
  if (!rep.admissible)
    throw QNotAdmissibleError("Q parameter not admissible: " + rep.detail);
  if (q.q.is_zero()) return GaTf{};  // open loop

  // C = (e0 - Q G)^-1 Q expanded over the scalar denominators: with
  // w = d_q d_p e0 - n_q n_p, the controller is conj(w) n_q d_p / cnorm(w).
  // The d_q factor cancels in the algebra, so no numeric reduction is asked
  // to find it.
  Multivector<Poly> n_w = -(q.q.num() * plant.num());
  n_w.c0 += q.q.den() * plant.den();
  const Poly cn = cnorm(n_w);
  double scale = 0.0;
  for (const Poly* p : {&n_w.c0, &n_w.c1, &n_w.c2, &n_w.c12})
    scale = std::max(scale, p->max_abs_coeff());
  if (cn.is_zero() || cn.max_abs_coeff() <= 1e-12 * scale * scale)
    throw AlgebraicLoopError("e0 - Q*G is a zero divisor; controller undefined");

  Multivector<Poly> num = conjugate(n_w) * q.q.num();
  num.c0 *= plant.den();
  num.c1 *= plant.den();
  num.c2 *= plant.den();
  num.c12 *= plant.den();
  return GaTf(std::move(num), cn);
}

QParam decoupling_q(const GaTf& plant) {
  const Poly& g0_num = plant.num().c0;
  const double scale =
      std::max({plant.num().c0.max_abs_coeff(), plant.num().c1.max_abs_coeff(),
                plant.num().c2.max_abs_coeff(), plant.num().c12.max_abs_coeff()});
  if (g0_num.is_zero() || g0_num.max_abs_coeff() <= 1e-12 * scale)
    throw DegeneratePlantError("plant has no scalar (e0) component");

  // Q*G = q0 * cnorm(G)/g0; pick q0 so the DC gain of that scalar is positive.
  const Poly cn = cnorm(plant.num());
  const double dc_num = cn.eval(0.0);
  const double dc_den = plant.den().eval(0.0) * g0_num.eval(0.0);
  const double q0 = (dc_num * dc_den < 0.0) ? -1.0 : 1.0;

  const Multivector<Poly> n = conjugate(plant.num());
  QParam q{GaTf(Multivector<Poly>{q0 * n.c0, q0 * n.c1, q0 * n.c2, q0 * n.c12},
                g0_num)};
  const AdmissibilityReport rep = q_admissible(q);
  if (!rep.admissible)
    throw QNotAdmissibleError("decoupling Q is not admissible: " + rep.detail);
  return q;
}

DecouplingReport verify_decoupled(const GaTf& plant, const GaTf& ctrl) {
  const GaTf g_cl = closed_loop(plant, ctrl);
  const Poly ga = g_cl.num().c0 + g_cl.num().c1;   // diagonal (0,0)
  const Poly gd = g_cl.num().c0 - g_cl.num().c1;   // diagonal (1,1)
  const Poly gb = g_cl.num().c2 + g_cl.num().c12;  // off-diagonal (0,1)
  const Poly gc = g_cl.num().c2 - g_cl.num().c12;  // off-diagonal (1,0)

  const double diag_scale = std::max(ga.max_abs_coeff(), gd.max_abs_coeff());
  if (diag_scale == 0.0)
    throw NotSymmetricError("closed loop is identically zero");

  DecouplingReport rep;
  rep.offdiag_residual =
      std::max(gb.max_abs_coeff(), gc.max_abs_coeff()) / diag_scale;

  if (rep.offdiag_residual < 1e-6) {
    const double diag_diff = (ga - gd).max_abs_coeff();
    if (diag_diff >= 1e-8 * diag_scale)
      throw NotSymmetricError(
          "closed loop is decoupled but its diagonal entries disagree");
    rep.diag = RatFun(ga, g_cl.den()).reduced();
  }
  return rep;
}

}  // namespace ga3ph
