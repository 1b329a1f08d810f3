#include "statespace.hpp"

#include "ga3ph/errors.hpp"

namespace ga3ph::detail {

SisoRealization::SisoRealization(const RatFun& f) {
  if (!f.is_proper())
    throw NotRealizableError("state-space realization of an improper function");
  const int n = f.den().degree();
  if (n == 0) {
    d = f.num().eval(0.0) / f.den().eval(0.0);
    return;
  }
  // monic denominator is guaranteed by RatFun's canonical form
  std::vector<double> num(static_cast<size_t>(n) + 1, 0.0);
  for (int k = 0; k <= f.num().degree(); ++k) num[static_cast<size_t>(k)] = f.num()[k];

  d = num[static_cast<size_t>(n)];
  a_row.resize(static_cast<size_t>(n));
  c.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    a_row[static_cast<size_t>(k)] = -f.den()[k];
    c[static_cast<size_t>(k)] = num[static_cast<size_t>(k)] - d * f.den()[k];
  }
  x.assign(static_cast<size_t>(n), 0.0);
}

double SisoRealization::output(double u) const {
  double y = d * u;
  for (size_t k = 0; k < c.size(); ++k) y += c[k] * x[k];
  return y;
}

namespace {

// xdot for the companion form: shift chain plus the a_row acting on the last
// state; input enters the last derivative.
void deriv(const std::vector<double>& a_row, const std::vector<double>& x, double u,
           std::vector<double>& dx) {
  const size_t n = x.size();
  for (size_t k = 0; k + 1 < n; ++k) dx[k] = x[k + 1];
  double acc = u;
  for (size_t k = 0; k < n; ++k) acc += a_row[k] * x[k];
  dx[n - 1] = acc;
}

}  // namespace

void SisoRealization::integrate(double u, double h) {
  const size_t n = x.size();
  if (n == 0) return;
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

  deriv(a_row, x, u, k1);
  for (size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
  deriv(a_row, tmp, u, k2);
  for (size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
  deriv(a_row, tmp, u, k3);
  for (size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
  deriv(a_row, tmp, u, k4);
  for (size_t i = 0; i < n; ++i)
    x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

}  // namespace ga3ph::detail
