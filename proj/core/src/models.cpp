#include "ga3ph/models.hpp"

#include <cmath>

#include "ga3ph/errors.hpp"

namespace ga3ph {

void CircuitParams::validate() const {
  if (!(L > 0.0) || !(Lu > 0.0) || !(R > 0.0))
    throw Error("circuit parameters must be strictly positive");
}

RealMimo2 build_rl_model(const CircuitParams& params, bool balanced) {
  params.validate();
  const double L = params.L, Lu = params.Lu, R = params.R;
  if (balanced) {
    RatFun g(Poly{R}, Poly{R, L});
    return {g, RatFun::zero(), RatFun::zero(), g};
  }
  const Poly d = 2.0 * (Poly{R, L} * Poly{3.0 * R, L + 2.0 * Lu});
  RealMimo2 m;
  m.ga = RatFun(3.0 * R * Poly{2.0 * R, L + Lu}, d);
  m.gb = RatFun(Poly{0.0, -std::sqrt(3.0) * R * (L - Lu)}, d);
  m.gc = m.gb;
  m.gd = RatFun(R * Poly{6.0 * R, 5.0 * L + Lu}, d);
  return m;
}

ComplexSiso real_to_complex(const RealMimo2& m) {
  const RatFun half(0.5);
  ComplexSiso c;
  c.g1_re = (m.ga + m.gd) * half;
  c.g1_im = (m.gc - m.gb) * half;
  c.g2_re = (m.ga - m.gd) * half;
  c.g2_im = (m.gb + m.gc) * half;
  return c;
}

RealMimo2 complex_to_real(const ComplexSiso& c) {
  RealMimo2 m;
  m.ga = c.g1_re + c.g2_re;
  m.gd = c.g1_re - c.g2_re;
  m.gb = c.g2_im - c.g1_im;
  m.gc = c.g2_im + c.g1_im;
  return m;
}

GaSiso real_to_ga(const RealMimo2& m) {
  Mat2<RatFun> mat;
  mat(0, 0) = m.ga;
  mat(0, 1) = m.gb;
  mat(1, 0) = m.gc;
  mat(1, 1) = m.gd;
  return {GaTf::from_ratfun_mv(mat2_to_mv(mat))};
}

RealMimo2 ga_to_real(const GaSiso& g) {
  const Mat2<RatFun> mat = mv_to_mat2(g.g.to_ratfun_mv());
  return {mat(0, 0), mat(0, 1), mat(1, 0), mat(1, 1)};
}

Mat2<Multivector<double>> tg_matrix() {
  using Mv = Multivector<double>;
  Mat2<Mv> t;
  t(0, 0) = Mv{0.5, 0.5, 0.0, 0.0};    // (e0+e1)/2
  t(0, 1) = Mv{0.0, 0.0, -0.5, 0.5};   // (-e2+e12)/2
  t(1, 0) = Mv{0.0, 0.0, -0.5, -0.5};  // (-e2-e12)/2
  t(1, 1) = Mv{0.5, -0.5, 0.0, 0.0};   // (e0-e1)/2
  return t;
}

Mat2<Multivector<RatFun>> mvmat2_mul(const Mat2<Multivector<RatFun>>& a,
                                     const Mat2<Multivector<RatFun>>& b) {
  Mat2<Multivector<RatFun>> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Mat2<Multivector<RatFun>> conjugate_by_tg(const RealMimo2& m) {
  using Mv = Multivector<RatFun>;
  const auto td = tg_matrix();
  Mat2<Mv> t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      t(i, j) = Mv{RatFun(td(i, j).c0), RatFun(td(i, j).c1), RatFun(td(i, j).c2),
                   RatFun(td(i, j).c12)};
  Mat2<Mv> mr;
  mr(0, 0) = Mv::scalar(m.ga);
  mr(0, 1) = Mv::scalar(m.gb);
  mr(1, 0) = Mv::scalar(m.gc);
  mr(1, 1) = Mv::scalar(m.gd);
  return mvmat2_mul(mvmat2_mul(t, mr), t);
}

namespace {

double num_scale(const RatFun& f) { return f.num().max_abs_coeff(); }

}  // namespace

bool is_balanced(const RealMimo2& m, double rel_tol) {
  const double scale = std::max({num_scale(m.ga), num_scale(m.gb),
                                 num_scale(m.gc), num_scale(m.gd)});
  if (scale == 0.0) return true;
  if (num_scale(m.gb) >= rel_tol * scale) return false;
  if (num_scale(m.gc) >= rel_tol * scale) return false;
  const RatFun diff = m.ga - m.gd;
  return num_scale(diff) < rel_tol * scale;
}

bool is_balanced(const GaSiso& g, double rel_tol) {
  const auto mv = g.g.to_ratfun_mv();
  const double scale = std::max({num_scale(mv.c0), num_scale(mv.c1),
                                 num_scale(mv.c2), num_scale(mv.c12)});
  if (scale == 0.0) return true;
  return num_scale(mv.c1) < rel_tol * scale && num_scale(mv.c2) < rel_tol * scale;
}

}  // namespace ga3ph
