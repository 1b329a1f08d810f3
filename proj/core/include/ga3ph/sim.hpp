#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "ga3ph/discretize.hpp"
#include "ga3ph/gatf.hpp"
#include "ga3ph/models.hpp"

namespace ga3ph {

/// Closed-loop simulation setup: continuous plant, GA controller run as a
/// discrete filter bank every Ts, three-phase sinusoidal references with an
/// additive step on one alpha/beta channel.
struct SimConfig {
  RealMimo2 plant;
  GaTf controller = GaTf::identity();
  double Ts = 1e-4;          // controller period, seconds
  int substeps = 10;         // plant RK4 substeps per controller tick
  double duration = 0.12;    // seconds
  double prewarp_omega = 2.0 * 3.14159265358979323846 * 60.0;

  struct Source {
    double V = 155.0;                                  // volts amplitude
    double omega = 2.0 * 3.14159265358979323846 * 60.0;  // rad/s
  } source;

  struct Step {
    double time = 0.05;   // seconds
    int channel = 1;      // 0 = alpha, 1 = beta
    double magnitude = 15.5;  // volts (default 0.1 * V)
  } step;

  /// Feed references directly as plant input (no feedback path).
  bool open_loop = false;

  void validate() const;
};

/// Uniformly sampled record of one run; all columns share the same length.
struct SimTrace {
  std::vector<double> t;
  std::vector<double> ref_alpha, ref_beta;
  std::vector<double> y_alpha, y_beta;
  std::vector<double> u_alpha, u_beta;
  std::vector<double> va, vb, vc;  // outputs mapped back to phase quantities

  size_t size() const { return t.size(); }
};

/// Reference vector at time t: Clarke projection of the balanced three-phase
/// sinusoid triple plus the configured step.
std::array<double, 2> reference_at(const SimConfig& cfg, double t);

/// Run the loop: sample y, form the error, advance the discrete controller
/// bank once, integrate the plant with the zero-order-held command.
/// Throws DivergedError when |y| exceeds 1e9; a partial trace is stored in
/// *partial when given.
SimTrace run_closed_loop(const SimConfig& cfg, SimTrace* partial = nullptr);

/// Cross-coupling measure: rerun the configuration without the step and
/// report max |y_other(t) - y_other_nostep(t)| over the 20 ms window after
/// the step, normalized by the step magnitude.
double decoupling_metric(const SimTrace& trace, const SimConfig& cfg);

/// SimTrace CSV: header, decimal point, comma separator, LF endings, full
/// double precision (round-trip exact).
void write_csv(const SimTrace& trace, std::ostream& os);
SimTrace read_csv(std::istream& is);

}  // namespace ga3ph
