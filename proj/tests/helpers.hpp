#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ga3ph/gatf.hpp"
#include "ga3ph/models.hpp"
#include "ga3ph/poly.hpp"
#include "ga3ph/ratfun.hpp"

namespace ga3ph::test {

// Reference parameter set used throughout (3 mH / 30 mH / 22 ohm).
inline constexpr double kL = 3e-3;
inline constexpr double kLu = 3e-2;
inline constexpr double kR = 22.0;

inline Poly reference_den() {
  return 2.0 * (Poly{kR, kL} * Poly{3.0 * kR, kL + 2.0 * kLu});
}

// Scale-free polynomial distance: max coefficient difference relative to the
// larger coefficient magnitude.
inline double poly_rel_diff(const Poly& a, const Poly& b) {
  const double scale = std::max({a.max_abs_coeff(), b.max_abs_coeff(), 1e-300});
  return (a - b).max_abs_coeff() / scale;
}

// Function-level distance between rational functions via cross-multiplication.
inline double ratfun_rel_diff(const RatFun& a, const RatFun& b) {
  const Poly lhs = a.num() * b.den();
  const Poly rhs = b.num() * a.den();
  const double scale = std::max({lhs.max_abs_coeff(), rhs.max_abs_coeff(), 1e-300});
  return (lhs - rhs).max_abs_coeff() / scale;
}

// Entrywise cross-multiplied distance normalized by the largest entry scale,
// so noise in a structurally-zero entry is judged against the matrix, not
// against itself.
inline double mimo_rel_diff(const RealMimo2& a, const RealMimo2& b) {
  const RatFun* ea[4] = {&a.ga, &a.gb, &a.gc, &a.gd};
  const RatFun* eb[4] = {&b.ga, &b.gb, &b.gc, &b.gd};
  double scale = 1e-300, worst = 0.0;
  Poly diffs[4];
  for (int k = 0; k < 4; ++k) {
    const Poly lhs = ea[k]->num() * eb[k]->den();
    const Poly rhs = eb[k]->num() * ea[k]->den();
    scale = std::max({scale, lhs.max_abs_coeff(), rhs.max_abs_coeff()});
    diffs[k] = lhs - rhs;
  }
  for (const auto& d : diffs) worst = std::max(worst, d.max_abs_coeff());
  return worst / scale;
}

// Sorted pairing of two complex sets; returns the worst relative mismatch.
inline double root_set_rel_diff(std::vector<std::complex<double>> a,
                                std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return 1e300;
  auto key = [](const std::complex<double>& z1, const std::complex<double>& z2) {
    if (z1.real() != z2.real()) return z1.real() < z2.real();
    return z1.imag() < z2.imag();
  };
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst,
                     std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i])));
  return worst;
}

// Random stable monic polynomial with log-uniform real roots in [lo, hi].
inline Poly random_stable_poly(std::mt19937& rng, int degree, double lo = 1e2,
                               double hi = 1e4) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < degree; ++i) roots.emplace_back(-std::exp(u(rng)), 0.0);
  return Poly::from_roots(roots, 1.0);
}

// Draw a set of stable pole groups whose union is pairwise separated by at
// least `min_sep` (relative). Representing near-coincident poles through
// polynomial coefficients is not information-preserving in doubles, so
// round-trip properties are stated over well-separated sets.
inline std::vector<Poly> random_separated_dens(std::mt19937& rng, int count,
                                               int degree, double min_sep = 0.05) {
  std::uniform_real_distribution<double> u(std::log(1e2), std::log(1e4));
  for (;;) {
    std::vector<double> roots;
    for (int i = 0; i < count * degree; ++i) roots.push_back(-std::exp(u(rng)));
    bool ok = true;
    for (size_t i = 0; i < roots.size() && ok; ++i)
      for (size_t j = i + 1; j < roots.size() && ok; ++j)
        if (std::abs(roots[i] - roots[j]) <
            min_sep * std::max(std::abs(roots[i]), std::abs(roots[j])))
          ok = false;
    if (!ok) continue;
    std::vector<Poly> out;
    for (int k = 0; k < count; ++k) {
      std::vector<std::complex<double>> rs;
      for (int i = 0; i < degree; ++i)
        rs.emplace_back(roots[static_cast<size_t>(k * degree + i)], 0.0);
      out.push_back(Poly::from_roots(rs, 1.0));
    }
    return out;
  }
}

// Random GA transfer function with a stable degree-2 denominator and
// degree <= 1 numerator coefficients.
inline GaTf random_gatf(std::mt19937& rng, double scale) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> deg(0, 1);
  const Poly den = random_stable_poly(rng, 2);
  auto coeff = [&] {
    Poly c{g(rng) * scale};
    if (deg(rng) == 1) c += Poly{0.0, g(rng) * scale};
    return c;
  };
  Multivector<Poly> n{coeff(), coeff(), coeff(), coeff()};
  if (n.c0.is_zero() && n.c1.is_zero() && n.c2.is_zero() && n.c12.is_zero())
    n.c0 = Poly{scale};
  return GaTf(n, den);
}

inline Multivector<double> random_mv(std::mt19937& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  return {g(rng), g(rng), g(rng), g(rng)};
}

inline double mv_max_abs(const Multivector<double>& m) {
  return std::max({std::abs(m.c0), std::abs(m.c1), std::abs(m.c2), std::abs(m.c12)});
}

inline Multivector<std::complex<double>> mv_at(const GaTf& g,
                                               std::complex<double> p) {
  return g.eval(p);
}

// 2x2 complex matrix helpers for frequency-domain oracles.
using CMat2 = std::array<std::array<std::complex<double>, 2>, 2>;

inline CMat2 cmat_of(const Multivector<std::complex<double>>& v) {
  return {{{v.c0 + v.c1, v.c2 + v.c12}, {v.c2 - v.c12, v.c0 - v.c1}}};
}

inline CMat2 cmat_mul(const CMat2& a, const CMat2& b) {
  CMat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

inline CMat2 cmat_inv(const CMat2& a) {
  const auto det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  return {{{a[1][1] / det, -a[0][1] / det}, {-a[1][0] / det, a[0][0] / det}}};
}

inline double cmat_max_abs_diff(const CMat2& a, const CMat2& b) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

inline CMat2 closed_loop_matrix_at(const RealMimo2& plant, const RealMimo2& ctrl,
                                   std::complex<double> p) {
  const CMat2 g = {{{plant.ga.eval(p), plant.gb.eval(p)},
                    {plant.gc.eval(p), plant.gd.eval(p)}}};
  const CMat2 c = {{{ctrl.ga.eval(p), ctrl.gb.eval(p)},
                    {ctrl.gc.eval(p), ctrl.gd.eval(p)}}};
  const CMat2 gc = cmat_mul(g, c);
  CMat2 eye_gc = gc;
  eye_gc[0][0] += 1.0;
  eye_gc[1][1] += 1.0;
  return cmat_mul(gc, cmat_inv(eye_gc));
}

}  // namespace ga3ph::test
