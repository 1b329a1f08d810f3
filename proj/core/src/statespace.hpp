#pragma once

#include <vector>

#include "ga3ph/models.hpp"
#include "ga3ph/ratfun.hpp"

namespace ga3ph::detail {

/// Controllable-canonical realization of one proper SISO rational function,
/// with direct feedthrough split off. Internal to the simulator.
struct SisoRealization {
  std::vector<double> a_row;  // bottom companion row: -den[0..n-1] (monic den)
  std::vector<double> c;      // output row (strictly proper part)
  double d = 0.0;             // feedthrough
  std::vector<double> x;      // state

  explicit SisoRealization(const RatFun& f);
  double output(double u) const;
  /// RK4 over [0, h] with u held constant.
  void integrate(double u, double h);
};

/// Four SISO blocks forming y = M(p) u for a 2x2 real plant.
struct PlantRealization {
  SisoRealization g[2][2];

  explicit PlantRealization(const RealMimo2& m)
      : g{{SisoRealization(m.ga), SisoRealization(m.gb)},
          {SisoRealization(m.gc), SisoRealization(m.gd)}} {}

  std::array<double, 2> output(const std::array<double, 2>& u) const {
    return {g[0][0].output(u[0]) + g[0][1].output(u[1]),
            g[1][0].output(u[0]) + g[1][1].output(u[1])};
  }
  void integrate(const std::array<double, 2>& u, double h, int substeps) {
    for (int s = 0; s < substeps; ++s)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g[i][j].integrate(u[static_cast<size_t>(j)], h);
  }
};

}  // namespace ga3ph::detail
