#include "ga3ph/clarke.hpp"

#include <cmath>

namespace ga3ph {

namespace {
const double kS3 = std::sqrt(3.0);
}

const std::array<std::array<double, 3>, 2> kClarke = {{
    {2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0},
    {0.0, kS3 / 3.0, -kS3 / 3.0},
}};

const std::array<std::array<double, 2>, 3> kClarkeInv = {{
    {1.0, 0.0},
    {-0.5, kS3 / 2.0},
    {-0.5, -kS3 / 2.0},
}};

namespace {

// Sum of weighted polynomials with position-wise residue chopping: a
// coefficient that cancels structurally leaves ~1e-16 of the term scale
// behind, which must not survive as a spurious root.
Poly weighted_sum(const std::vector<std::pair<double, const Poly*>>& terms) {
  Poly acc = Poly::zero();
  int deg = 0;
  for (const auto& [w, p] : terms) {
    acc += w * *p;
    deg = std::max(deg, p->degree());
  }
  std::vector<double> c(static_cast<size_t>(deg) + 1, 0.0);
  for (int k = 0; k <= deg; ++k) {
    double scale = 0.0;
    for (const auto& [w, p] : terms) scale = std::max(scale, std::abs(w * (*p)[k]));
    const double v = acc[k];
    c[static_cast<size_t>(k)] = std::abs(v) <= 1e-12 * scale ? 0.0 : v;
  }
  return Poly(std::move(c));
}

}  // namespace

RealMimo2 clarke_project(const TfMatrix3& m3) {
  // All entries of an MNA transfer share one denominator; in that case the
  // projection is a pure numerator combination and the single reduction
  // happens at the very end. Entries with unrelated denominators take the
  // generic rational-arithmetic route.
  bool shared_den = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!coeffwise_close(m3[static_cast<size_t>(i)][static_cast<size_t>(j)].den(),
                           m3[0][0].den()))
        shared_den = false;

  std::array<std::array<RatFun, 2>, 2> r;
  if (shared_den) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        std::vector<std::pair<double, const Poly*>> terms;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            terms.emplace_back(kClarke[static_cast<size_t>(i)][static_cast<size_t>(a)] *
                                   kClarkeInv[static_cast<size_t>(b)][static_cast<size_t>(j)],
                               &m3[static_cast<size_t>(a)][static_cast<size_t>(b)].num());
        r[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            RatFun(weighted_sum(terms), m3[0][0].den()).reduced();
      }
  } else {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        RatFun acc;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            acc += RatFun(kClarke[static_cast<size_t>(i)][static_cast<size_t>(a)] *
                          kClarkeInv[static_cast<size_t>(b)][static_cast<size_t>(j)]) *
                   m3[static_cast<size_t>(a)][static_cast<size_t>(b)];
        r[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc.reduced();
      }
  }
  return {r[0][0], r[0][1], r[1][0], r[1][1]};
}

std::array<double, 2> clarke(const std::array<double, 3>& abc) {
  std::array<double, 2> out{};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 3; ++k)
      out[static_cast<size_t>(i)] +=
          kClarke[static_cast<size_t>(i)][static_cast<size_t>(k)] *
          abc[static_cast<size_t>(k)];
  return out;
}

std::array<double, 3> inv_clarke(const std::array<double, 2>& ab) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 2; ++k)
      out[static_cast<size_t>(i)] +=
          kClarkeInv[static_cast<size_t>(i)][static_cast<size_t>(k)] *
          ab[static_cast<size_t>(k)];
  return out;
}

}  // namespace ga3ph
