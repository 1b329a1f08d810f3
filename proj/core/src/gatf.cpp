#include "ga3ph/gatf.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "ga3ph/errors.hpp"

namespace ga3ph {

namespace {

constexpr double kCoeffChop = 1e-12;   // negligible-coefficient threshold
constexpr double kClusterTol = 1e-7;   // shared root-clustering radius

std::array<Poly*, 4> coeff_ptrs(Multivector<Poly>& mv) {
  return {&mv.c0, &mv.c1, &mv.c2, &mv.c12};
}
std::array<const Poly*, 4> coeff_ptrs(const Multivector<Poly>& mv) {
  return {&mv.c0, &mv.c1, &mv.c2, &mv.c12};
}

// Remove from pool the root nearest to r within the cluster radius.
bool take_nearest(std::vector<std::complex<double>>& pool, std::complex<double> r) {
  const double tol = kClusterTol * (1.0 + std::abs(r));
  size_t best = pool.size();
  double bestd = tol;
  for (size_t j = 0; j < pool.size(); ++j) {
    const double d = std::abs(pool[j] - r);
    if (d <= bestd) {
      bestd = d;
      best = j;
    }
  }
  if (best == pool.size()) return false;
  pool.erase(pool.begin() + best);
  return true;
}

}  // namespace

GaTf::GaTf(Multivector<Poly> num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivByZeroError("GA transfer function with zero denominator");
  canonicalize();
}

void GaTf::canonicalize() {
  auto nums = coeff_ptrs(num_);

  double mmax = 0.0;
  for (const Poly* p : nums) mmax = std::max(mmax, p->max_abs_coeff());
  if (mmax == 0.0) {
    num_ = Multivector<Poly>{};
    den_ = Poly::one();
    return;
  }
  for (Poly* p : nums)
    if (p->max_abs_coeff() <= kCoeffChop * mmax) *p = Poly::zero();

  // Joint cancellation: a denominator root is removed only when every
  // nonzero coefficient carries it. Iterated to a fixed point.
  for (bool again = true; again && den_.degree() >= 1;) {
    again = false;
    std::vector<size_t> nz;
    bool blocked = false;  // a nonzero constant coefficient has no roots to share
    for (size_t i = 0; i < 4; ++i) {
      if (nums[i]->is_zero()) continue;
      if (nums[i]->degree() == 0)
        blocked = true;
      else
        nz.push_back(i);
    }
    if (blocked || nz.empty()) break;

    auto droots = poly_roots(den_);
    std::vector<std::vector<std::complex<double>>> nroots(nz.size());
    for (size_t k = 0; k < nz.size(); ++k) nroots[k] = poly_roots(*nums[nz[k]]);

    std::vector<std::complex<double>> keep;
    bool cancelled = false;
    for (const auto& r : droots) {
      std::vector<std::vector<std::complex<double>>> trial = nroots;
      bool all = true;
      for (auto& pool : trial)
        if (!take_nearest(pool, r)) {
          all = false;
          break;
        }
      if (all && !nz.empty()) {
        nroots = std::move(trial);
        cancelled = true;
      } else {
        keep.push_back(r);
      }
    }
    if (cancelled) {
      den_ = Poly::from_roots(keep, den_.leading(), kClusterTol);
      for (size_t k = 0; k < nz.size(); ++k)
        *nums[nz[k]] = Poly::from_roots(nroots[k], nums[nz[k]]->leading(), kClusterTol);
      again = true;
    }
  }

  const double lead = den_.leading();
  den_ *= 1.0 / lead;
  for (Poly* p : nums) *p *= 1.0 / lead;
}

GaTf GaTf::from_ratfun_mv(const Multivector<RatFun>& mv) {
  const std::array<const RatFun*, 4> fs = {&mv.c0, &mv.c1, &mv.c2, &mv.c12};

  // Common denominator as an exact product of the distinct denominators
  // (near-equal ones deduplicated). No root surgery here: products are
  // noise-free, and the canonical reduction can still cancel jointly.
  std::vector<Poly> distinct;
  std::array<int, 4> which = {-1, -1, -1, -1};
  for (size_t i = 0; i < 4; ++i) {
    if (fs[i]->is_zero()) continue;
    const Poly& d = fs[i]->den();
    if (d.degree() == 0) continue;  // canonical monic constant is 1
    for (size_t k = 0; k < distinct.size(); ++k)
      if (coeffwise_close(distinct[k], d)) which[i] = static_cast<int>(k);
    if (which[i] < 0) {
      which[i] = static_cast<int>(distinct.size());
      distinct.push_back(d);
    }
  }
  Poly common = Poly::one();
  for (const auto& d : distinct) common *= d;

  Multivector<Poly> num;
  auto nums = coeff_ptrs(num);
  for (size_t i = 0; i < 4; ++i) {
    if (fs[i]->is_zero()) {
      *nums[i] = Poly::zero();
      continue;
    }
    Poly mult = Poly::one();
    for (size_t k = 0; k < distinct.size(); ++k)
      if (static_cast<int>(k) != which[i]) mult *= distinct[k];
    *nums[i] = fs[i]->num() * mult;
  }
  return GaTf(std::move(num), common);
}

Multivector<RatFun> GaTf::to_ratfun_mv() const {
  // Over the shared denominator, unreduced: keeps round trips through the
  // coefficient maps exact instead of refactoring through root estimates.
  return {RatFun(num_.c0, den_), RatFun(num_.c1, den_), RatFun(num_.c2, den_),
          RatFun(num_.c12, den_)};
}

RatFun GaTf::coeff(int k) const {
  const std::array<const Poly*, 4> nums = coeff_ptrs(num_);
  return RatFun(*nums[static_cast<size_t>(k)], den_).reduced();
}

bool GaTf::is_zero() const {
  return num_.c0.is_zero() && num_.c1.is_zero() && num_.c2.is_zero() &&
         num_.c12.is_zero();
}

bool GaTf::is_scalar() const {
  return num_.c1.is_zero() && num_.c2.is_zero() && num_.c12.is_zero();
}

Multivector<std::complex<double>> GaTf::eval(std::complex<double> p) const {
  const std::complex<double> d = den_.eval(p);
  return {num_.c0.eval(p) / d, num_.c1.eval(p) / d, num_.c2.eval(p) / d,
          num_.c12.eval(p) / d};
}

GaTf operator+(const GaTf& a, const GaTf& b) {
  if (coeffwise_close(a.den_, b.den_))
    return GaTf(a.num_ + b.num_, a.den_);
  Multivector<Poly> num{a.num_.c0 * b.den_ + b.num_.c0 * a.den_,
                        a.num_.c1 * b.den_ + b.num_.c1 * a.den_,
                        a.num_.c2 * b.den_ + b.num_.c2 * a.den_,
                        a.num_.c12 * b.den_ + b.num_.c12 * a.den_};
  return GaTf(std::move(num), a.den_ * b.den_);
}

GaTf operator-(const GaTf& a, const GaTf& b) { return a + (-b); }

GaTf operator*(const GaTf& a, const GaTf& b) {
  return GaTf(a.num_ * b.num_, a.den_ * b.den_);
}

GaTf GaTf::inverse() const {
  if (is_zero()) throw ZeroDivisorError("inverse of the zero GA transfer function");
  if (is_scalar()) return GaTf(Multivector<Poly>::scalar(den_), num_.c0);
  const Poly cn = cnorm(num_);
  // cnorm can vanish identically even for a nonzero multivector (zero divisor).
  const double scale = std::max({num_.c0.max_abs_coeff(), num_.c1.max_abs_coeff(),
                                 num_.c2.max_abs_coeff(), num_.c12.max_abs_coeff()});
  if (cn.is_zero() || cn.max_abs_coeff() <= 1e-12 * scale * scale)
    throw ZeroDivisorError("GA transfer function is a zero divisor (cnorm == 0)");
  const Multivector<Poly> cj = conjugate(num_);
  return GaTf({cj.c0 * den_, cj.c1 * den_, cj.c2 * den_, cj.c12 * den_}, cn);
}

std::string GaTf::str(int significant_digits) const {
  static const char* names[4] = {"e0", "e1", "e2", "e12"};
  std::ostringstream os;
  for (int k = 0; k < 4; ++k) {
    if (k) os << "\n";
    os << names[k] << ": " << coeff(k).str(significant_digits);
  }
  return os.str();
}

}  // namespace ga3ph
