#pragma once

#include <complex>
#include <string>

#include "ga3ph/multivector.hpp"
#include "ga3ph/poly.hpp"
#include "ga3ph/ratfun.hpp"

namespace ga3ph {

/// GA-valued transfer function: a G(2,0) multivector of polynomial
/// numerators over one scalar (real-polynomial) denominator.
///
/// Canonical form: the denominator is monic; polynomial factors shared by the
/// denominator and *all* nonzero numerator coefficients are cancelled
/// (clustered roots, relative radius 1e-7); numerator coefficients whose
/// magnitude is negligible against the largest coefficient are zeroed.
/// Keeping the denominator scalar is always possible: dividing by a
/// multivector multiplies through by its conjugate, pushing the scalar cnorm
/// into the denominator.
class GaTf {
 public:
  GaTf() : num_{}, den_(Poly::one()) {}
  GaTf(Multivector<Poly> num, Poly den);

  static GaTf scalar(RatFun f) {
    return GaTf(Multivector<Poly>::scalar(f.num()), f.den());
  }
  static GaTf identity() { return scalar(RatFun::one()); }
  static GaTf from_ratfun_mv(const Multivector<RatFun>& mv);

  const Multivector<Poly>& num() const { return num_; }
  const Poly& den() const { return den_; }

  Multivector<RatFun> to_ratfun_mv() const;
  /// Coefficient as a rational function; index 0,1,2,3 = e0,e1,e2,e12.
  RatFun coeff(int k) const;

  bool is_zero() const;
  /// Only the e0 coefficient is nonzero.
  bool is_scalar() const;

  Multivector<std::complex<double>> eval(std::complex<double> p) const;

  GaTf operator-() const { return GaTf(-num_, den_); }
  friend GaTf operator+(const GaTf& a, const GaTf& b);
  friend GaTf operator-(const GaTf& a, const GaTf& b);
  friend GaTf operator*(const GaTf& a, const GaTf& b);

  /// Multiplicative inverse. Scalar-only operands take the plain reciprocal;
  /// otherwise conj(n)*d over cnorm(n). Throws ZeroDivisorError when cnorm
  /// is identically zero.
  GaTf inverse() const;

  std::string str(int significant_digits = 12) const;

 private:
  void canonicalize();
  Multivector<Poly> num_;
  Poly den_;
};

}  // namespace ga3ph
