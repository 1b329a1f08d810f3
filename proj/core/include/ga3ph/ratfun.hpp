#pragma once

#include <complex>
#include <string>

#include "ga3ph/poly.hpp"

namespace ga3ph {

/// Quotient of two real polynomials in p, kept with a monic denominator.
///
/// Arithmetic reduces the result: common roots of numerator and denominator
/// (clustered within a relative radius of 1e-7) are cancelled and the
/// fraction is rebuilt from the surviving roots. Coprime inputs pass through
/// untouched apart from the monic normalization.
class RatFun {
 public:
  RatFun() : num_(Poly::zero()), den_(Poly::one()) {}
  RatFun(Poly num, Poly den);
  RatFun(double v) : num_(Poly::constant(v)), den_(Poly::one()) {}  // NOLINT

  static RatFun zero() { return RatFun(); }
  static RatFun one() { return RatFun(1.0); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// deg(num) <= deg(den). The zero function counts as proper.
  bool is_proper() const;

  double eval(double x) const { return num_.eval(x) / den_.eval(x); }
  std::complex<double> eval(std::complex<double> x) const {
    return num_.eval(x) / den_.eval(x);
  }

  /// Cancel clustered common roots; returns the canonical representative.
  RatFun reduced(double cluster_tol = 1e-7) const;

  /// Chop numerator/denominator coefficients below rel_eps of their own
  /// max magnitude (for cancellation-noise cleanup in elimination loops).
  RatFun chopped(double rel_eps = 1e-12) const;

  RatFun operator-() const { return RatFun(-num_, den_); }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  RatFun inverse() const;

  std::string str(int significant_digits = 12) const;

 private:
  Poly num_;
  Poly den_;
};

/// Arithmetic entry point keyed by an operation tag (add, sub, mul, div).
enum class RatOp { add, sub, mul, div };
RatFun ratfun_arith(const RatFun& a, const RatFun& b, RatOp op);

}  // namespace ga3ph
