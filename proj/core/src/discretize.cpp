#include "ga3ph/discretize.hpp"

#include <cmath>

#include "ga3ph/errors.hpp"
#include "ga3ph/models.hpp"

namespace ga3ph {

DiscreteFilter::DiscreteFilter(std::vector<double> b, std::vector<double> a)
    : b_(std::move(b)), a_(std::move(a)) {
  if (a_.empty() || a_[0] == 0.0)
    throw NotRealizableError("discrete filter needs a nonzero a[0]");
  const double a0 = a_[0];
  for (double& v : b_) v /= a0;
  for (double& v : a_) v /= a0;
  if (b_.empty()) b_ = {0.0};
  if (b_.size() > a_.size())
    throw NotRealizableError("discrete filter with more feedforward than feedback taps");
  state_.assign(a_.size() > 0 ? a_.size() - 1 : 0, 0.0);
}

void DiscreteFilter::reset() { std::fill(state_.begin(), state_.end(), 0.0); }

double DiscreteFilter::step(double x) {
  const double b0 = b_[0];
  const double y = b0 * x + (state_.empty() ? 0.0 : state_[0]);
  for (size_t i = 0; i < state_.size(); ++i) {
    const double bi = (i + 1 < b_.size()) ? b_[i + 1] : 0.0;
    const double ai = (i + 1 < a_.size()) ? a_[i + 1] : 0.0;
    const double next = (i + 1 < state_.size()) ? state_[i + 1] : 0.0;
    state_[i] = bi * x + next - ai * y;
  }
  return y;
}

std::complex<double> DiscreteFilter::response(double omega, double Ts) const {
  const std::complex<double> zinv = std::exp(std::complex<double>(0.0, -omega * Ts));
  std::complex<double> num = 0.0, den = 0.0, zk = 1.0;
  const size_t n = std::max(b_.size(), a_.size());
  for (size_t k = 0; k < n; ++k) {
    if (k < b_.size()) num += b_[k] * zk;
    if (k < a_.size()) den += a_[k] * zk;
    zk *= zinv;
  }
  return num / den;
}

DiscreteFilter discretize(const RatFun& f, double Ts, double prewarp_omega) {
  if (!(Ts > 0.0)) throw BadPrewarpError("sample period must be positive");
  if (prewarp_omega * Ts >= M_PI)
    throw BadPrewarpError("prewarp frequency at or above Nyquist");
  if (!f.is_proper())
    throw NotRealizableError("improper transfer function cannot be discretized");
  if (f.is_zero()) return DiscreteFilter({0.0}, {1.0});

  const double K = prewarp_omega > 0.0
                       ? prewarp_omega / std::tan(prewarp_omega * Ts / 2.0)
                       : 2.0 / Ts;

  // Substitute p = K (z-1)/(z+1) and clear (z+1)^n.
  const int n = f.den().degree();
  const Poly zm1{-1.0, 1.0}, zp1{1.0, 1.0};
  auto lift = [&](const Poly& c) {
    Poly acc = Poly::zero();
    double Ki = 1.0;
    for (int i = 0; i <= n; ++i) {
      if (c[i] != 0.0) {
        Poly term = Poly::constant(c[i] * Ki);
        for (int k = 0; k < i; ++k) term *= zm1;
        for (int k = 0; k < n - i; ++k) term *= zp1;
        acc += term;
      }
      Ki *= K;
    }
    return acc;
  };
  const Poly bz = lift(f.num());
  const Poly az = lift(f.den());

  // Ascending powers of z -> coefficients of z^-1 (descending z).
  std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
  std::vector<double> a(static_cast<size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    b[static_cast<size_t>(n - k)] = bz[k];
    a[static_cast<size_t>(n - k)] = az[k];
  }
  return DiscreteFilter(std::move(b), std::move(a));
}

std::array<double, 2> FilterBank2::step(const std::array<double, 2>& x) {
  return {f[0][0].step(x[0]) + f[0][1].step(x[1]),
          f[1][0].step(x[0]) + f[1][1].step(x[1])};
}

void FilterBank2::reset() {
  for (auto& row : f)
    for (auto& flt : row) flt.reset();
}

FilterBank2 realize_ga_controller(const GaTf& c, double Ts, double prewarp_omega) {
  const RealMimo2 m = ga_to_real({c});
  static const char* names[2][2] = {{"(0,0)", "(0,1)"}, {"(1,0)", "(1,1)"}};
  const RatFun* entries[2][2] = {{&m.ga, &m.gb}, {&m.gc, &m.gd}};
  FilterBank2 bank;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (!entries[i][j]->is_proper())
        throw NotRealizableError(std::string("controller entry ") + names[i][j] +
                                 " is improper");
      bank.f[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          discretize(*entries[i][j], Ts, prewarp_omega);
    }
  return bank;
}

}  // namespace ga3ph
