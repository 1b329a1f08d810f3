#include "ga3ph/ratfun.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "ga3ph/errors.hpp"

namespace ga3ph {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivByZeroError("rational function with zero denominator");
  const double lead = den_.leading();
  den_ *= 1.0 / lead;
  num_ *= 1.0 / lead;
  if (num_.is_zero()) den_ = Poly::one();
}

bool RatFun::is_proper() const {
  if (num_.is_zero()) return true;
  return num_.degree() <= den_.degree();
}

namespace {

// Newton refinement of a root of multiplicity m: the (m-1)-th derivative has
// it as a simple root. Evaluation runs in a scaled variable for conditioning.
std::complex<double> refine_multiple_root(const Poly& poly, std::complex<double> r,
                                          int multiplicity) {
  Poly target = poly;
  for (int k = 1; k < multiplicity; ++k) target = target.derivative();
  const Poly dtarget = target.derivative();
  if (dtarget.is_zero()) return r;
  const double s = 1.0 + std::abs(r);
  std::vector<double> tc = target.coeffs(), dc = dtarget.coeffs();
  double pw = 1.0;
  for (auto& v : tc) {
    v *= pw;
    pw *= s;
  }
  pw = 1.0;
  for (auto& v : dc) {
    v *= pw;
    pw *= s;
  }
  const Poly ts{std::vector<double>(tc)}, ds{std::vector<double>(dc)};
  std::complex<double> q = r / s;
  for (int it = 0; it < 4; ++it) {
    const auto f = ts.eval(q);
    const auto df = ds.eval(q);
    if (std::abs(df) == 0.0) break;
    const auto qn = q - f / df;
    if (std::abs(ts.eval(qn)) < std::abs(f))
      q = qn;
    else
      break;
  }
  const auto refined = q * s;
  // keep the refinement only if it stayed inside the cluster neighborhood
  if (std::abs(refined - r) > 1e-2 * (1.0 + std::abs(r))) return r;
  return refined;
}

}  // namespace

RatFun RatFun::reduced(double cluster_tol) const {
  if (num_.is_zero()) return RatFun();
  if (num_.degree() == 0 || den_.degree() == 0) return *this;
  const auto nroots = poly_roots(num_);
  const auto droots = poly_roots(den_);

  // Cluster numerator and denominator roots together. Within a cluster,
  // min(#num, #den) copies cancel and survivors are rebuilt at the cluster
  // centroid: the splitting of a numerically-multiple root is symmetric
  // around the true location, so the centroid restores its accuracy.
  struct Tagged {
    std::complex<double> r;
    bool from_num;
  };
  std::vector<Tagged> all;
  for (const auto& r : nroots) all.push_back({r, true});
  for (const auto& r : droots) all.push_back({r, false});

  std::vector<bool> used(all.size(), false);
  std::vector<std::complex<double>> keep_num, keep_den;
  bool cancelled = false;
  for (size_t i = 0; i < all.size(); ++i) {
    if (used[i]) continue;
    const double tol = cluster_tol * (1.0 + std::abs(all[i].r));
    std::vector<size_t> members{i};
    used[i] = true;
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(all[j].r - all[i].r) <= tol) {
        members.push_back(j);
        used[j] = true;
      }
    }
    int nn = 0, nd = 0;
    std::complex<double> centroid = 0.0;
    for (size_t m : members) {
      centroid += all[m].r;
      (all[m].from_num ? nn : nd) += 1;
    }
    centroid /= static_cast<double>(members.size());
    const int c = std::min(nn, nd);
    if (c > 0) cancelled = true;
    std::complex<double> rep = members.size() > 1 ? centroid : all[i].r;
    // survivors of a multi-member cluster: pin the location back down with a
    // Newton step on the derivative matching the original multiplicity
    if (members.size() > 1 && nn > c)
      rep = refine_multiple_root(num_, rep, nn);
    else if (members.size() > 1 && nd > c)
      rep = refine_multiple_root(den_, rep, nd);
    for (int k = 0; k < nn - c; ++k) keep_num.push_back(rep);
    for (int k = 0; k < nd - c; ++k) keep_den.push_back(rep);
  }
  if (!cancelled) return *this;
  Poly n2 = Poly::from_roots(keep_num, num_.leading(), cluster_tol);
  Poly d2 = Poly::from_roots(keep_den, den_.leading(), cluster_tol);
  return RatFun(std::move(n2), std::move(d2));
}

RatFun RatFun::chopped(double rel_eps) const {
  return RatFun(num_.chopped(rel_eps), den_.chopped(rel_eps));
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (coeffwise_close(a.den_, b.den_)) return RatFun(a.num_ + b.num_, a.den_).reduced();
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_).reduced();
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  if (coeffwise_close(a.den_, b.den_)) return RatFun(a.num_ - b.num_, a.den_).reduced();
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_).reduced();
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_).reduced();
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DivByZeroError("division by identically-zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_).reduced();
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivByZeroError("inverse of identically-zero rational function");
  return RatFun(den_, num_);
}

RatFun ratfun_arith(const RatFun& a, const RatFun& b, RatOp op) {
  switch (op) {
    case RatOp::add: return a + b;
    case RatOp::sub: return a - b;
    case RatOp::mul: return a * b;
    case RatOp::div: return a / b;
  }
  throw Error("unknown rational operation");
}

std::string RatFun::str(int significant_digits) const {
  std::ostringstream os;
  if (den_.degree() == 0 && den_.leading() == 1.0) {
    os << num_.str(significant_digits);
  } else {
    os << "(" << num_.str(significant_digits) << ") / ("
       << den_.str(significant_digits) << ")";
  }
  return os.str();
}

}  // namespace ga3ph
