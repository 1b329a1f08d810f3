#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ga3ph {

/// Real polynomial in the operator p, coefficients stored ascending by degree.
///
/// The zero polynomial is the single coefficient {0}. Construction drops
/// trailing coefficients that are exactly zero; tolerance-based chopping is a
/// separate, explicit operation (chopped) because legitimate polynomials in
/// this domain span 15+ decades of coefficient magnitude.
class Poly {
 public:
  Poly() : c_{0.0} {}
  Poly(std::initializer_list<double> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly{}; }
  static Poly one() { return Poly{1.0}; }
  static Poly constant(double v) { return Poly{v}; }
  /// The indeterminate p itself.
  static Poly variable() { return Poly{0.0, 1.0}; }

  /// Real polynomial with the given roots (conjugate pairs merged into real
  /// quadratics) scaled by `leading`. Lone complex roots within `realify_tol`
  /// of the real axis are projected onto it.
  static Poly from_roots(std::span<const std::complex<double>> roots,
                         double leading = 1.0, double realify_tol = 1e-7);

  const std::vector<double>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0.0; }
  double leading() const { return c_.back(); }
  double operator[](int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0.0;
  }
  double max_abs_coeff() const;

  double eval(double x) const;
  std::complex<double> eval(std::complex<double> x) const;
  Poly derivative() const;

  /// Copy with coefficients below rel_eps * max|coeff| set to zero (then
  /// re-trimmed). Used where additive cancellation is known to leave noise.
  Poly chopped(double rel_eps = 1e-12) const;

  /// Same polynomial scaled so the leading coefficient is one.
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(double s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, double s) { return a *= s; }
  friend Poly operator*(double s, Poly a) { return a *= s; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  /// Ascending-power text, e.g. "1.5 + 2p + p^2".
  std::string str(int significant_digits = 12) const;

 private:
  void trim();
  std::vector<double> c_;
};

/// Quotient and remainder with respect to a nonzero divisor.
struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};
PolyDivMod poly_divmod(const Poly& dividend, const Poly& divisor);

/// Same degree and coefficient-wise agreement within rel_tol of the larger
/// coefficient scale (used to recognize denominators that differ only in
/// rounding, e.g. the same product formed in a different order).
bool coeffwise_close(const Poly& a, const Poly& b, double rel_tol = 1e-12);

/// All degree-many roots (with multiplicity) of a polynomial of degree >= 1,
/// computed from the balanced/scaled companion matrix and Newton-polished.
/// Conjugate symmetry of the returned set is enforced. Throws NoRootsError
/// on constant or zero input.
std::vector<std::complex<double>> poly_roots(const Poly& poly);

/// Strict Hurwitz test via the Routh array: true iff every root has strictly
/// negative real part. Marginal (imaginary-axis) roots count as unstable.
/// Throws on the zero polynomial.
bool hurwitz_stable(const Poly& poly);

}  // namespace ga3ph
