#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "ga3ph/errors.hpp"
#include "ga3ph/ratfun.hpp"

namespace ga3ph {

/// A multivector of the geometric algebra G(2,0) over a commutative
/// coefficient ring: x = c0*e0 + c1*e1 + c2*e2 + c12*e12, where e1, e2 square
/// to +e0 and the pseudoscalar e12 = e1*e2 squares to -e0. Instantiated with
/// double, Poly and RatFun coefficients; the degenerate algebras G(0,0) and
/// G(0,1) are the sub-cases with only c0 (reals) or c0, c12 (complex-like,
/// since e12^2 = -e0).
template <typename Ring>
struct Multivector {
  Ring c0{};
  Ring c1{};
  Ring c2{};
  Ring c12{};

  Multivector() = default;
  Multivector(Ring s, Ring x, Ring y, Ring b)
      : c0(std::move(s)), c1(std::move(x)), c2(std::move(y)), c12(std::move(b)) {}

  static Multivector scalar(Ring s) { return {std::move(s), Ring{}, Ring{}, Ring{}}; }
  static Multivector e0() { return scalar(Ring{1.0}); }
  static Multivector e1() { return {Ring{}, Ring{1.0}, Ring{}, Ring{}}; }
  static Multivector e2() { return {Ring{}, Ring{}, Ring{1.0}, Ring{}}; }
  static Multivector e12() { return {Ring{}, Ring{}, Ring{}, Ring{1.0}}; }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2, a.c12 + b.c12};
  }
  friend Multivector operator-(const Multivector& a, const Multivector& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2, a.c12 - b.c12};
  }
  Multivector operator-() const { return {-c0, -c1, -c2, -c12}; }

  /// The geometric product, expanded over the full 4x4 Cayley table.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    return {a.c0 * b.c0 + a.c1 * b.c1 + a.c2 * b.c2 - a.c12 * b.c12,
            a.c0 * b.c1 + a.c1 * b.c0 - a.c2 * b.c12 + a.c12 * b.c2,
            a.c0 * b.c2 + a.c2 * b.c0 + a.c1 * b.c12 - a.c12 * b.c1,
            a.c0 * b.c12 + a.c12 * b.c0 + a.c1 * b.c2 - a.c2 * b.c1};
  }
  friend Multivector operator*(const Ring& s, const Multivector& a) {
    return {s * a.c0, s * a.c1, s * a.c2, s * a.c12};
  }
  friend Multivector operator*(const Multivector& a, const Ring& s) { return s * a; }
};

/// Geometric product as a named operation (same as operator*).
template <typename Ring>
Multivector<Ring> gp(const Multivector<Ring>& a, const Multivector<Ring>& b) {
  return a * b;
}

/// Clifford conjugate: sign flip of the e1, e2 and e12 parts. Involutive,
/// and conj(x)*x is always a pure scalar.
template <typename Ring>
Multivector<Ring> conjugate(const Multivector<Ring>& a) {
  return {a.c0, -a.c1, -a.c2, -a.c12};
}

/// Scalar part of conj(x)*x: c0^2 - c1^2 - c2^2 + c12^2. Equals the
/// determinant of the 2x2 matrix representation.
template <typename Ring>
Ring cnorm(const Multivector<Ring>& a) {
  return a.c0 * a.c0 - a.c1 * a.c1 - a.c2 * a.c2 + a.c12 * a.c12;
}

/// Dual: right multiplication by the pseudoscalar e12.
template <typename Ring>
Multivector<Ring> dual(const Multivector<Ring>& x) {
  return x * Multivector<Ring>::e12();
}

/// 2x2 matrix over the coefficient ring; row-major.
template <typename Ring>
struct Mat2 {
  std::array<std::array<Ring, 2>, 2> m{};
  Ring& operator()(int i, int j) { return m[i][j]; }
  const Ring& operator()(int i, int j) const { return m[i][j]; }
};

/// The algebra isomorphism with 2x2 matrices over the ring:
///   e0 -> I,  e1 -> diag(1,-1),  e2 -> [[0,1],[1,0]],  e12 -> [[0,1],[-1,0]].
template <typename Ring>
Mat2<Ring> mv_to_mat2(const Multivector<Ring>& x) {
  Mat2<Ring> r;
  r(0, 0) = x.c0 + x.c1;
  r(0, 1) = x.c2 + x.c12;
  r(1, 0) = x.c2 - x.c12;
  r(1, 1) = x.c0 - x.c1;
  return r;
}

template <typename Ring>
Multivector<Ring> mat2_to_mv(const Mat2<Ring>& m) {
  const Ring half{0.5};
  return {half * (m(0, 0) + m(1, 1)), half * (m(0, 0) - m(1, 1)),
          half * (m(0, 1) + m(1, 0)), half * (m(0, 1) - m(1, 0))};
}

/// Inverse via conj(x)/cnorm(x). Real coefficients: fails when |cnorm| is
/// below 1e-12 of the squared multivector magnitude (zero divisor).
inline Multivector<double> inverse(const Multivector<double>& a) {
  const double n = cnorm(a);
  const double scale =
      a.c0 * a.c0 + a.c1 * a.c1 + a.c2 * a.c2 + a.c12 * a.c12;
  if (std::abs(n) <= 1e-12 * scale || scale == 0.0)
    throw ZeroDivisorError("multivector is a zero divisor (cnorm ~ 0): [" +
                           std::to_string(a.c0) + ", " + std::to_string(a.c1) +
                           ", " + std::to_string(a.c2) + ", " +
                           std::to_string(a.c12) + "]");
  return conjugate(a) * (1.0 / n);
}

/// Inverse with rational-function coefficients: defined whenever cnorm is not
/// the identically-zero function.
inline Multivector<RatFun> inverse(const Multivector<RatFun>& a) {
  const RatFun n = cnorm(a);
  if (n.is_zero())
    throw ZeroDivisorError("multivector over RatFun is a zero divisor (cnorm == 0)");
  const RatFun inv_n = n.inverse();
  return conjugate(a) * inv_n;
}

}  // namespace ga3ph
