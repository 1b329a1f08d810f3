#include "ga3ph/sim.hpp"

#include <cmath>

#include "ga3ph/clarke.hpp"
#include "ga3ph/errors.hpp"
#include "statespace.hpp"

namespace ga3ph {

void SimConfig::validate() const {
  if (!(Ts > 0.0)) throw Error("Ts must be positive");
  if (substeps < 1) throw Error("substeps must be >= 1");
  if (!(duration > 0.0)) throw Error("duration must be positive");
  if (!(step.time < duration)) throw Error("step time must fall inside the run");
  if (step.channel != 0 && step.channel != 1)
    throw Error("step channel must be 0 (alpha) or 1 (beta)");
}

std::array<double, 2> reference_at(const SimConfig& cfg, double t) {
  const double V = cfg.source.V;
  const double wt = cfg.source.omega * t;
  const std::array<double, 3> abc = {V * std::cos(wt),
                                     V * std::cos(wt - 2.0 * M_PI / 3.0),
                                     V * std::cos(wt + 2.0 * M_PI / 3.0)};
  std::array<double, 2> ref = clarke(abc);
  if (t >= cfg.step.time)
    ref[static_cast<size_t>(cfg.step.channel)] += cfg.step.magnitude;
  return ref;
}

SimTrace run_closed_loop(const SimConfig& cfg, SimTrace* partial) {
  cfg.validate();

  detail::PlantRealization plant(cfg.plant);
  FilterBank2 bank;
  if (!cfg.open_loop)
    bank = realize_ga_controller(cfg.controller, cfg.Ts, cfg.prewarp_omega);

  const auto n = static_cast<size_t>(std::llround(cfg.duration / cfg.Ts));
  SimTrace tr;
  for (auto* col : {&tr.t, &tr.ref_alpha, &tr.ref_beta, &tr.y_alpha, &tr.y_beta,
                    &tr.u_alpha, &tr.u_beta, &tr.va, &tr.vb, &tr.vc})
    col->reserve(n);

  std::array<double, 2> u = {0.0, 0.0};
  const double h = cfg.Ts / cfg.substeps;
  for (size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * cfg.Ts;
    const auto ref = reference_at(cfg, t);
    const auto y = plant.output(u);

    if (!(std::abs(y[0]) <= 1e9) || !(std::abs(y[1]) <= 1e9)) {
      if (partial) *partial = tr;
      throw DivergedError("simulation diverged at t = " + std::to_string(t), t);
    }

    if (cfg.open_loop) {
      u = ref;
    } else {
      const std::array<double, 2> eps = {ref[0] - y[0], ref[1] - y[1]};
      u = bank.step(eps);
    }

    const auto abc = inv_clarke(y);
    tr.t.push_back(t);
    tr.ref_alpha.push_back(ref[0]);
    tr.ref_beta.push_back(ref[1]);
    tr.y_alpha.push_back(y[0]);
    tr.y_beta.push_back(y[1]);
    tr.u_alpha.push_back(u[0]);
    tr.u_beta.push_back(u[1]);
    tr.va.push_back(abc[0]);
    tr.vb.push_back(abc[1]);
    tr.vc.push_back(abc[2]);

    plant.integrate(u, h, cfg.substeps);
  }
  if (partial) *partial = tr;
  return tr;
}

double decoupling_metric(const SimTrace& trace, const SimConfig& cfg) {
  SimConfig base = cfg;
  base.step.magnitude = 0.0;
  const SimTrace quiet = run_closed_loop(base);

  const size_t other = cfg.step.channel == 1 ? 0 : 1;
  const auto& col = other == 0 ? trace.y_alpha : trace.y_beta;
  const auto& ref_col = other == 0 ? quiet.y_alpha : quiet.y_beta;

  double worst = 0.0;
  const double t0 = cfg.step.time;
  const double t1 = cfg.step.time + 20e-3;
  for (size_t k = 0; k < trace.size() && k < quiet.size(); ++k) {
    if (trace.t[k] < t0 || trace.t[k] > t1) continue;
    worst = std::max(worst, std::abs(col[k] - ref_col[k]));
  }
  const double mag = std::abs(cfg.step.magnitude);
  return mag > 0.0 ? worst / mag : worst;
}

}  // namespace ga3ph
