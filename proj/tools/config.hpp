#pragma once

#include <string>

#include "ga3ph/gatf.hpp"
#include "ga3ph/models.hpp"

namespace ga3ph::cli {

/// Flat INI-style run configuration. Unknown sections or keys are rejected.
struct RunConfig {
  // [circuit]
  double L = 3e-3;
  double Lu = 3e-2;
  double R = 22.0;
  bool balanced = false;

  // [source]
  double V = 155.0;
  double freq_hz = 60.0;

  // [sim]
  double Ts = 1e-4;
  double duration = 0.12;
  int substeps = 10;
  double step_time = 0.05;
  int step_channel = 1;          // 0 = alpha, 1 = beta
  double step_magnitude = 15.5;  // 0.1 * V by default

  // [controller]
  std::string controller_type = "decoupling";  // proportional | decoupling | custom
  double k = 1.0;
  std::string c0, c1, c2, c3;  // custom coefficients: "<num coeffs> / <den coeffs>"
};

/// Parse INI text; throws ParseError with a line number on malformed input,
/// unknown keys, or non-positive physical values.
RunConfig parse_config(const std::string& text);

/// Parse a custom-coefficient entry "1833.33 0.625 / 0 1" into a RatFun
/// (ascending coefficients, numerator / denominator).
RatFun parse_ratfun_text(const std::string& text);

/// Build the configured controller as a GA transfer function.
GaTf build_controller(const RunConfig& cfg, const GaTf& plant);

}  // namespace ga3ph::cli
