#include "ga3ph/poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "ga3ph/errors.hpp"

namespace ga3ph {

void Poly::trim() {
  if (c_.empty()) {
    c_ = {0.0};
    return;
  }
  while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

double Poly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (degree() == 0) return zero();
  std::vector<double> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
  return Poly(std::move(d));
}

Poly Poly::chopped(double rel_eps) const {
  const double cut = rel_eps * max_abs_coeff();
  std::vector<double> d = c_;
  for (double& v : d)
    if (std::abs(v) <= cut) v = 0.0;
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (1.0 / leading());
}

Poly Poly::operator-() const {
  std::vector<double> d = c_;
  for (double& v : d) v = -v;
  return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_ = {0.0};
    return *this;
  }
  std::vector<double> out(c_.size() + o.c_.size() - 1, 0.0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(double s) {
  for (double& v : c_) v *= s;
  trim();
  return *this;
}

bool coeffwise_close(const Poly& a, const Poly& b, double rel_tol) {
  if (a.degree() != b.degree()) return false;
  return (a - b).max_abs_coeff() <=
         rel_tol * std::max(a.max_abs_coeff(), b.max_abs_coeff());
}

PolyDivMod poly_divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DivByZeroError("polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {Poly::zero(), dividend};

  // Work in the scaled variable p = s*q with s the divisor's root-magnitude
  // bound: synthetic division is unstable when the divisor's leading
  // coefficient is small against its other coefficients.
  const int dn = divisor.degree();
  double s = 0.0;
  for (int k = 0; k < dn; ++k) {
    if (divisor[k] == 0.0) continue;
    s = std::max(s, std::pow(std::abs(divisor[k] / divisor[dn]), 1.0 / (dn - k)));
  }
  if (s <= 0.0 || !std::isfinite(s)) s = 1.0;

  auto scaled = [s](const Poly& p) {
    std::vector<double> c = p.coeffs();
    double pw = 1.0;
    for (auto& v : c) {
      v *= pw;
      pw *= s;
    }
    return c;
  };
  std::vector<double> rem = scaled(dividend);
  const std::vector<double> dv = scaled(divisor);

  const int dq = dividend.degree() - dn;
  std::vector<double> quo(static_cast<size_t>(dq) + 1, 0.0);
  const double lead = dv[static_cast<size_t>(dn)];
  for (int k = dq; k >= 0; --k) {
    const double f = rem[static_cast<size_t>(k + dn)] / lead;
    quo[static_cast<size_t>(k)] = f;
    for (int j = 0; j <= dn; ++j)
      rem[static_cast<size_t>(k + j)] -= f * dv[static_cast<size_t>(j)];
  }
  rem.resize(std::max<size_t>(1, static_cast<size_t>(dn)));

  // back to the unscaled variable
  double pw = 1.0;
  for (auto& v : quo) {
    v /= pw;
    pw *= s;
  }
  pw = 1.0;
  for (auto& v : rem) {
    v /= pw;
    pw *= s;
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::from_roots(std::span<const std::complex<double>> roots, double leading,
                      double realify_tol) {
  Poly acc = Poly::constant(leading);
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    const auto r = roots[i];
    const double scale = 1.0 + std::abs(r);
    used[i] = true;
    if (std::abs(r.imag()) <= 1e-9 * scale) {
      acc *= Poly{-r.real(), 1.0};
      continue;
    }
    // conjugate partner first: an intact pair stays a pair even when its
    // imaginary part is small
    size_t best = roots.size();
    double bestd = realify_tol * scale * 10.0;
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(std::conj(roots[j]) - r);
      if (dist < bestd) {
        bestd = dist;
        best = j;
      }
    }
    if (best < roots.size()) {
      used[best] = true;
      const auto q = 0.5 * (r + std::conj(roots[best]));
      acc *= Poly{std::norm(q), -2.0 * q.real(), 1.0};
    } else if (std::abs(r.imag()) <= realify_tol * scale) {
      // orphan left behind by a cancellation against a nearly-equal real
      // root (a split double); its imaginary part is residue
      acc *= Poly{-r.real(), 1.0};
    } else {
      // no partner: pair the root with its own conjugate
      acc *= Poly{std::norm(r), -2.0 * r.real(), 1.0};
    }
  }
  return acc;
}

std::string Poly::str(int significant_digits) const {
  std::ostringstream os;
  os.precision(significant_digits);
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    const double v = c_[k];
    if (v == 0.0 && !(c_.size() == 1)) continue;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    const double a = std::abs(v);
    if (k == 0 || a != 1.0) os << a;
    if (k >= 1) {
      if (a != 1.0) os << "*";
      os << "p";
      if (k >= 2) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// Newton polish against the original polynomial; keeps the better iterate.
std::complex<double> polish_root(const Poly& p, const Poly& dp,
                                 std::complex<double> r) {
  for (int it = 0; it < 3; ++it) {
    const auto f = p.eval(r);
    const auto df = dp.eval(r);
    if (std::abs(df) == 0.0) break;
    const auto step = f / df;
    const auto rn = r - step;
    if (std::abs(p.eval(rn)) < std::abs(f))
      r = rn;
    else
      break;
  }
  return r;
}

}  // namespace

std::vector<std::complex<double>> poly_roots(const Poly& poly) {
  if (poly.is_zero()) throw NoRootsError("zero polynomial has no defined roots");
  if (poly.degree() < 1) throw NoRootsError("degree-0 polynomial has no roots");

  const auto& c = poly.coeffs();
  const int n = poly.degree();

  // Strip exact zero roots first (they are common and exact).
  int lead_zeros = 0;
  while (lead_zeros < n && c[lead_zeros] == 0.0) ++lead_zeros;
  std::vector<double> work(c.begin() + lead_zeros, c.end());

  std::vector<std::complex<double>> roots(lead_zeros, 0.0);
  const int m = static_cast<int>(work.size()) - 1;
  if (m >= 1) {
    // Variable scaling p = s*q (s ~ largest root magnitude, Fujiwara bound)
    // tames the companion matrix when coefficients span many decades (Eigen
    // does not balance).
    double s = 0.0;
    for (int k = 0; k < m; ++k) {
      if (work[k] == 0.0) continue;
      s = std::max(s, std::pow(std::abs(work[k] / work[m]), 1.0 / (m - k)));
    }
    if (s <= 0.0 || !std::isfinite(s)) s = 1.0;
    std::vector<double> sc(work.size());
    double pw = 1.0;
    for (int k = 0; k <= m; ++k) {
      sc[static_cast<size_t>(k)] = work[static_cast<size_t>(k)] * pw;  // c_k * s^k
      pw *= s;
    }
    const double lead = sc[static_cast<size_t>(m)];

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
    for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < m; ++i) companion(i, m - 1) = -sc[i] / lead;

    // Parlett-Reinsch balancing (Eigen's QR iteration does not balance, and
    // companion matrices of wide-rooted polynomials need it).
    for (bool converged = false; !converged;) {
      converged = true;
      for (int i = 0; i < m; ++i) {
        double cn = 0.0, rn = 0.0;
        for (int j = 0; j < m; ++j) {
          if (j == i) continue;
          cn += std::abs(companion(j, i));
          rn += std::abs(companion(i, j));
        }
        if (cn == 0.0 || rn == 0.0) continue;
        const double s0 = cn + rn;
        double f = 1.0;
        while (cn < rn / 2.0) {
          cn *= 2.0;
          rn /= 2.0;
          f *= 2.0;
        }
        while (cn >= rn * 2.0) {
          cn /= 2.0;
          rn *= 2.0;
          f /= 2.0;
        }
        if (cn + rn < 0.95 * s0) {
          converged = false;
          for (int j = 0; j < m; ++j) {
            companion(i, j) /= f;
            companion(j, i) *= f;
          }
        }
      }
    }

    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
      throw NoRootsError("companion eigenvalue iteration failed");

    // polish in the scaled variable, where Horner evaluation is well behaved
    const Poly base(sc);
    const Poly dbase = base.derivative();
    for (int i = 0; i < m; ++i) {
      const std::complex<double> q = polish_root(base, dbase, es.eigenvalues()(i));
      roots.push_back(q * s);
    }
  }

  // Enforce conjugate symmetry: pair roots greedily, average the pair.
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    const double scale = 1.0 + std::abs(roots[i]);
    if (std::abs(roots[i].imag()) <= 1e-9 * scale) {
      roots[i] = {roots[i].real(), 0.0};
      used[i] = true;
      continue;
    }
    size_t best = roots.size();
    double bestd = 1e-6 * scale;
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(std::conj(roots[j]) - roots[i]);
      if (dist < bestd) {
        bestd = dist;
        best = j;
      }
    }
    used[i] = true;
    if (best < roots.size()) {
      used[best] = true;
      const auto q = 0.5 * (roots[i] + std::conj(roots[best]));
      roots[i] = q;
      roots[best] = std::conj(q);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

bool hurwitz_stable(const Poly& poly) {
  if (poly.is_zero()) throw Error("hurwitz_stable: zero polynomial");
  const Poly p = poly.leading() < 0 ? -poly : poly;
  const int n = p.degree();
  if (n == 0) return true;  // nonzero constant: no roots at all

  // Necessary condition: every coefficient strictly positive. Exact sign
  // test; legitimate polynomials here span >1e15 in coefficient magnitude,
  // so no relative cutoff is safe at this stage.
  for (int k = 0; k <= n; ++k)
    if (p[k] <= 0.0) return false;

  // Routh array. Rows are normalized each step; a non-positive (or
  // numerically ambiguous) pivot means the polynomial cannot be certified
  // strictly Hurwitz.
  std::vector<double> upper, lower;
  for (int k = n; k >= 0; k -= 2) upper.push_back(p[k]);
  for (int k = n - 1; k >= 0; k -= 2) lower.push_back(p[k]);
  for (int step = 0; step < n - 1; ++step) {
    // Exact sign test: row entries span many decades structurally, so no
    // relative cutoff against the row scale is meaningful here.
    if (lower[0] <= 0.0) return false;
    const double f = upper[0] / lower[0];
    std::vector<double> next(upper.size() - 1);
    for (size_t k = 0; k < next.size(); ++k) {
      const double a = (k + 1 < upper.size()) ? upper[k + 1] : 0.0;
      const double b = (k + 1 < lower.size()) ? lower[k + 1] : 0.0;
      next[k] = a - f * b;
    }
    double m = 0.0;
    for (double v : next) m = std::max(m, std::abs(v));
    if (m > 0.0)
      for (double& v : next) v /= m;
    upper = std::move(lower);
    lower = std::move(next);
    if (lower.empty()) return false;  // defensive; should not happen
  }
  return lower[0] > 0.0;
}

}  // namespace ga3ph
