#pragma once

#include <array>
#include <complex>
#include <vector>

#include "ga3ph/gatf.hpp"
#include "ga3ph/ratfun.hpp"

namespace ga3ph {

/// IIR difference equation y[k] = sum b[i] x[k-i] - sum a[j] y[k-j], with
/// a[0] normalized to 1 and a transposed direct-form-II delay line.
class DiscreteFilter {
 public:
  DiscreteFilter() : b_{0.0}, a_{1.0} {}
  DiscreteFilter(std::vector<double> b, std::vector<double> a);

  const std::vector<double>& b() const { return b_; }
  const std::vector<double>& a() const { return a_; }

  double step(double x);
  void reset();

  /// Frequency response at z = exp(j*omega*Ts).
  std::complex<double> response(double omega, double Ts) const;

 private:
  std::vector<double> b_, a_, state_;
};

/// Bilinear (Tustin) discretization with frequency prewarping:
/// p <- K (z-1)/(z+1), K = prewarp_omega / tan(prewarp_omega*Ts/2).
/// The discrete response matches the continuous one exactly at the prewarp
/// frequency. Throws NotRealizableError for improper f and BadPrewarpError
/// when the prewarp frequency reaches Nyquist. prewarp_omega <= 0 selects
/// the plain Tustin factor K = 2/Ts.
DiscreteFilter discretize(const RatFun& f, double Ts, double prewarp_omega);

/// 2x2 bank of filters acting on the (alpha, beta) error vector.
struct FilterBank2 {
  std::array<std::array<DiscreteFilter, 2>, 2> f;
  std::array<double, 2> step(const std::array<double, 2>& x);
  void reset();
};

/// Lower a GA controller to its equivalent real 2x2 filter bank and
/// discretize each entry. Throws NotRealizableError naming the entry.
FilterBank2 realize_ga_controller(const GaTf& c, double Ts, double prewarp_omega);

}  // namespace ga3ph
