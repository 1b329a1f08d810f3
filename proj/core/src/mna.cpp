#include "ga3ph/mna.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "ga3ph/errors.hpp"

namespace ga3ph {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;
using Cplx = std::complex<double>;

// Exact polynomial division used when clearing row denominators (the row
// multiplier is a product containing the denominator).
Poly div_exact(const Poly& num, const Poly& den) {
  auto dm = poly_divmod(num, den);
  if (dm.remainder.max_abs_coeff() > 1e-9 * std::max(num.max_abs_coeff(), 1e-300))
    throw Error("row clearing produced a non-exact division");
  return dm.quotient;
}

// Substitute q = p/w0: coefficient k is divided by w0^k.
Poly unscale_variable(const Poly& f, double w0) {
  std::vector<double> c = f.coeffs();
  double pw = 1.0;
  for (auto& v : c) {
    v /= pw;
    pw *= w0;
  }
  return Poly(std::move(c));
}

// Determinant generator: evaluates det(M(q)) at points on a circle and
// recovers the polynomial by discrete Fourier interpolation. Every sample is
// an independently well-conditioned numeric LU, so there is no symbolic
// error growth; sampling noise sits flat at ~1e-15 of the determinant scale.
class DetInterpolator {
 public:
  DetInterpolator(const PolyMatrix& a, int degree_bound, double radius = 1.17)
      : n_(static_cast<int>(a.size())), nodes_(degree_bound + 1), radius_(radius) {
    samples_.resize(static_cast<size_t>(nodes_));
    for (int i = 0; i < nodes_; ++i)
      qs_.push_back(std::polar(radius_, 2.0 * M_PI * i / nodes_));
    values_.resize(static_cast<size_t>(nodes_),
                   Eigen::MatrixXcd::Zero(n_, n_));
    for (int i = 0; i < nodes_; ++i)
      for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
          values_[static_cast<size_t>(i)](r, c) =
              a[static_cast<size_t>(r)][static_cast<size_t>(c)].eval(
                  qs_[static_cast<size_t>(i)]);
  }

  // Determinant with column `col` replaced by the numeric values of `rhs`
  // (pass col = -1 for the plain determinant). Also reports the scale of a
  // Hadamard bound so callers can detect a vanishing determinant.
  Poly determinant(const std::vector<Poly>& rhs, int col, double* rel_scale,
                   int* first_bad_pivot) const {
    double hadamard = 0.0;
    std::vector<Cplx> dets(static_cast<size_t>(nodes_));
    if (first_bad_pivot) *first_bad_pivot = -1;
    for (int i = 0; i < nodes_; ++i) {
      Eigen::MatrixXcd m = values_[static_cast<size_t>(i)];
      if (col >= 0)
        for (int r = 0; r < n_; ++r)
          m(r, col) = rhs[static_cast<size_t>(r)].eval(qs_[static_cast<size_t>(i)]);
      double had = 1.0;
      for (int r = 0; r < n_; ++r) had *= m.row(r).norm();
      hadamard = std::max(hadamard, had);
      const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
      dets[static_cast<size_t>(i)] = lu.determinant();
      if (first_bad_pivot && *first_bad_pivot < 0) {
        const auto& u = lu.matrixLU();
        for (int r = 0; r < n_; ++r)
          if (std::abs(u(r, r)) <= 1e-12 * std::max(had, 1e-300)) {
            *first_bad_pivot = r;
            break;
          }
      }
    }
    double dmax = 0.0;
    for (const auto& d : dets) dmax = std::max(dmax, std::abs(d));
    if (rel_scale) *rel_scale = dmax / std::max(hadamard, 1e-300);

    // inverse DFT; the polynomial has real coefficients
    std::vector<double> coeffs(static_cast<size_t>(nodes_));
    double cmax = 0.0;
    for (int k = 0; k < nodes_; ++k) {
      Cplx acc = 0.0;
      for (int i = 0; i < nodes_; ++i)
        acc += dets[static_cast<size_t>(i)] *
               std::polar(1.0, -2.0 * M_PI * i * k / nodes_);
      acc /= static_cast<double>(nodes_);
      acc /= std::pow(radius_, k);
      coeffs[static_cast<size_t>(k)] = acc.real();
      cmax = std::max(cmax, std::abs(acc.real()));
    }
    // flat sampling noise: chop against the largest coefficient
    for (auto& v : coeffs)
      if (std::abs(v) <= 1e-12 * cmax) v = 0.0;
    return Poly(std::move(coeffs));
  }

 private:
  int n_;
  int nodes_;
  double radius_;
  std::vector<Cplx> qs_;
  std::vector<Eigen::MatrixXcd> values_;
  std::vector<int> samples_;
};

}  // namespace

TfMatrix3 mna_transfer(const Netlist& netlist) {
  // node numbering; ground is eliminated
  std::map<std::string, int> nodes;
  auto node_id = [&](const std::string& name) -> int {
    if (name == netlist.ground) return -1;
    auto [it, inserted] = nodes.emplace(name, static_cast<int>(nodes.size()));
    return it->second;
  };
  for (const auto& el : netlist.elements) {
    node_id(el.node_plus);
    node_id(el.node_minus);
  }

  const int n_nodes = static_cast<int>(nodes.size());
  int n_src = 0;
  for (const auto& el : netlist.elements)
    if (el.kind == Element::Kind::V) ++n_src;
  const int n = n_nodes + n_src;

  // Characteristic frequency; solving in q = p/w0 keeps polynomial
  // coefficients near unit scale.
  double log_r = 0.0;
  int n_r = 0;
  for (const auto& el : netlist.elements)
    if (el.kind == Element::Kind::R) {
      log_r += std::log(el.value);
      ++n_r;
    }
  const double r_geo = n_r ? std::exp(log_r / n_r) : 1.0;
  double log_w = 0.0;
  int n_w = 0;
  for (const auto& el : netlist.elements) {
    if (el.kind == Element::Kind::L) {
      log_w += std::log(r_geo / el.value);
      ++n_w;
    } else if (el.kind == Element::Kind::C) {
      log_w += std::log(1.0 / (r_geo * el.value));
      ++n_w;
    }
  }
  const double w0 = n_w ? std::exp(log_w / n_w) : 1.0;

  // Assemble over RatFun (admittance stamps keep denominators to powers of
  // q), then clear each row to polynomial form.
  std::vector<std::vector<RatFun>> a(static_cast<size_t>(n),
                                     std::vector<RatFun>(static_cast<size_t>(n)));
  std::vector<std::array<RatFun, 3>> b(static_cast<size_t>(n));

  int src_row = n_nodes;
  for (const auto& el : netlist.elements) {
    const int np = node_id(el.node_plus);
    const int nm = node_id(el.node_minus);
    auto at = [&](int i, int j) -> RatFun& {
      return a[static_cast<size_t>(i)][static_cast<size_t>(j)];
    };
    if (el.kind == Element::Kind::V) {
      const int br = src_row++;
      if (np >= 0) {
        at(np, br) += RatFun::one();
        at(br, np) += RatFun::one();
      }
      if (nm >= 0) {
        at(nm, br) += RatFun(-1.0);
        at(br, nm) += RatFun(-1.0);
      }
      if (!el.source_label.empty())
        for (int k = 0; k < 3; ++k)
          if (netlist.inputs[static_cast<size_t>(k)] == el.source_label)
            b[static_cast<size_t>(br)][static_cast<size_t>(k)] = RatFun::one();
      continue;
    }
    RatFun y;  // branch admittance in the scaled variable q = p/w0
    switch (el.kind) {
      case Element::Kind::R: y = RatFun(Poly::one(), Poly{el.value}); break;
      case Element::Kind::L:
        y = RatFun(Poly::one(), Poly{0.0, el.value * w0});
        break;
      case Element::Kind::C:
        y = RatFun(Poly{0.0, el.value * w0}, Poly::one());
        break;
      case Element::Kind::V: break;
    }
    if (np >= 0) at(np, np) += y;
    if (nm >= 0) at(nm, nm) += y;
    if (np >= 0 && nm >= 0) {
      at(np, nm) -= y;
      at(nm, np) -= y;
    }
  }

  // Clear denominators row by row (products of distinct stamp denominators,
  // deduplicated by exact equality). This is noise-free: pure products.
  PolyMatrix pa(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n)));
  std::vector<std::array<Poly, 3>> pb(static_cast<size_t>(n));
  int degree_bound = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<Poly> dens;
    auto note_den = [&](const RatFun& f) {
      if (f.is_zero() || f.den().degree() == 0) return;
      for (const auto& d : dens)
        if (d == f.den()) return;
      dens.push_back(f.den());
    };
    for (int j = 0; j < n; ++j) note_den(a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    for (int k = 0; k < 3; ++k) note_den(b[static_cast<size_t>(i)][static_cast<size_t>(k)]);
    Poly mult = Poly::one();
    for (const auto& d : dens) mult *= d;
    auto clear = [&](const RatFun& f) {
      if (f.is_zero()) return Poly::zero();
      return f.num() * div_exact(mult, f.den());
    };
    int row_deg = 0;
    for (int j = 0; j < n; ++j) {
      Poly cleared = clear(a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      row_deg = std::max(row_deg, cleared.degree());
      pa[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(cleared);
    }
    for (int k = 0; k < 3; ++k) {
      Poly cleared = clear(b[static_cast<size_t>(i)][static_cast<size_t>(k)]);
      row_deg = std::max(row_deg, cleared.degree());
      pb[static_cast<size_t>(i)][static_cast<size_t>(k)] = std::move(cleared);
    }
    degree_bound += row_deg;
  }

  const DetInterpolator interp(pa, degree_bound);

  double rel_scale = 0.0;
  int bad_pivot = -1;
  const Poly den_det = interp.determinant({}, -1, &rel_scale, &bad_pivot);
  if (den_det.is_zero() || rel_scale < 1e-10)
    throw SingularError("MNA system singular at elimination step " +
                        std::to_string(std::max(bad_pivot, 0)));

  TfMatrix3 out;
  for (int i = 0; i < 3; ++i) {
    const std::string& name = netlist.outputs[static_cast<size_t>(i)];
    if (name == netlist.ground) {
      for (int k = 0; k < 3; ++k)
        out[static_cast<size_t>(i)][static_cast<size_t>(k)] = RatFun::zero();
      continue;
    }
    const auto it = nodes.find(name);
    if (it == nodes.end())
      throw SingularError("output node '" + name + "' does not appear in the netlist");
    for (int k = 0; k < 3; ++k) {
      std::vector<Poly> rhs(static_cast<size_t>(n));
      for (int r = 0; r < n; ++r)
        rhs[static_cast<size_t>(r)] = pb[static_cast<size_t>(r)][static_cast<size_t>(k)];
      const Poly num_det = interp.determinant(rhs, it->second, nullptr, nullptr);
      // Entries stay over the shared determinant denominator (not reduced):
      // downstream linear combinations are then exact polynomial sums, and
      // the one reduction happens at the end of the chain.
      out[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          RatFun(unscale_variable(num_det, w0), unscale_variable(den_det, w0));
    }
  }
  return out;
}

}  // namespace ga3ph
