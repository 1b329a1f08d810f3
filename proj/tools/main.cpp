#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "config.hpp"
#include "ga3ph/analysis.hpp"
#include "ga3ph/clarke.hpp"
#include "ga3ph/errors.hpp"
#include "ga3ph/mna.hpp"
#include "ga3ph/models.hpp"
#include "ga3ph/netlist.hpp"
#include "ga3ph/sim.hpp"
#include "ga3ph/synthesis.hpp"
#include "svg.hpp"

namespace {

using namespace ga3ph;
using cli::RunConfig;

constexpr int kExitParse = 2;
constexpr int kExitAlgebraicLoop = 3;
constexpr int kExitSynthesis = 4;
constexpr int kExitDiverged = 5;
constexpr int kExitNotRealizable = 6;

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

// Common plant-selection flags shared by the subcommands.
struct PlantOptions {
  std::string config_path;
  std::string netlist_path;
  bool balanced = false;
  bool unbalanced = false;
  double L = 3e-3, Lu = 3e-2, R = 22.0;

  void attach(CLI::App& app) {
    app.add_option("--config", config_path, "run configuration file (INI)");
    app.add_option("--netlist", netlist_path, "netlist file; overrides the closed form");
    app.add_flag("--balanced", balanced, "balanced closed-form circuit model");
    app.add_flag("--unbalanced", unbalanced, "unbalanced closed-form circuit model");
    app.add_option("--L", L, "line inductance, henry");
    app.add_option("--Lu", Lu, "unbalanced-phase inductance, henry");
    app.add_option("--R", R, "load resistance, ohm");
  }

  RunConfig load_config() const {
    RunConfig cfg;
    if (!config_path.empty()) cfg = cli::parse_config(read_file(config_path));
    if (balanced) cfg.balanced = true;
    if (unbalanced) cfg.balanced = false;
    if (config_path.empty()) {
      cfg.L = L;
      cfg.Lu = Lu;
      cfg.R = R;
    }
    return cfg;
  }

  RealMimo2 plant_matrix(const RunConfig& cfg) const {
    if (!netlist_path.empty()) {
      const Netlist nl = parse_netlist(read_file(netlist_path));
      return clarke_project(mna_transfer(nl));
    }
    return build_rl_model({cfg.L, cfg.Lu, cfg.R}, cfg.balanced);
  }
};

void print_rv(const RealMimo2& m) {
  std::printf("Ga: %s\n", m.ga.reduced().str().c_str());
  std::printf("Gb: %s\n", m.gb.reduced().str().c_str());
  std::printf("Gc: %s\n", m.gc.reduced().str().c_str());
  std::printf("Gd: %s\n", m.gd.reduced().str().c_str());
}

void print_cv(const ComplexSiso& c) {
  std::printf("G1.re: %s\n", c.g1_re.reduced().str().c_str());
  std::printf("G1.im: %s\n", c.g1_im.reduced().str().c_str());
  std::printf("G2.re: %s\n", c.g2_re.reduced().str().c_str());
  std::printf("G2.im: %s\n", c.g2_im.reduced().str().c_str());
}

void print_ga(const GaTf& g) { std::printf("%s\n", g.str().c_str()); }

std::string roots_str(const std::vector<std::complex<double>>& roots) {
  std::ostringstream os;
  os.precision(12);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (i) os << ' ';
    os << roots[i].real();
    if (roots[i].imag() != 0.0)
      os << (roots[i].imag() > 0 ? "+" : "") << roots[i].imag() << 'j';
  }
  return os.str();
}

std::string coeffs_str(const Poly& p) {
  std::ostringstream os;
  os.precision(12);
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ' ';
    os << p.coeffs()[i];
  }
  return os.str();
}

GaTf configured_controller(const RunConfig& cfg, const RealMimo2& plant) {
  return cli::build_controller(cfg, real_to_ga(plant).g);
}

int cmd_model(const PlantOptions& opts, const std::string& format) {
  const RunConfig cfg = opts.load_config();
  const RealMimo2 m = opts.plant_matrix(cfg);
  if (format == "rv") {
    print_rv(m);
  } else if (format == "cv") {
    print_cv(real_to_complex(m));
  } else {
    print_ga(real_to_ga(m).g);
  }
  return 0;
}

int cmd_stability(const PlantOptions& opts, double k, bool has_sweep,
                  const std::vector<double>& sweep) {
  const RunConfig cfg = opts.load_config();
  const RealMimo2 m = opts.plant_matrix(cfg);
  const GaTf plant = real_to_ga(m).g;

  std::vector<double> gains;
  if (has_sweep) {
    const double kmin = sweep[0], kmax = sweep[1];
    const int steps = std::max(1, static_cast<int>(sweep[2]));
    for (int i = 0; i <= steps; ++i)
      gains.push_back(kmin * std::pow(kmax / kmin, static_cast<double>(i) / steps));
  } else {
    gains.push_back(k);
  }

  std::printf("k,stable,slowest_pole,d_cl_coeffs,d_cl_roots,minimal_poles\n");
  for (double gain : gains) {
    const GaTf ctrl(
        Multivector<Poly>{Poly{gain}, Poly{gain}, Poly::zero(), Poly::zero()},
        Poly::one());
    const ClosedLoopReport rep = analyze_closed_loop(plant, ctrl);
    const auto roots = poly_roots(rep.d_cl);
    double slowest = -1e300;
    for (const auto& r : roots) slowest = std::max(slowest, r.real());
    std::printf("%.12g,%d,%.12g,\"%s\",\"%s\",\"%s\"\n", gain, rep.stable ? 1 : 0,
                slowest, coeffs_str(rep.d_cl).c_str(), roots_str(roots).c_str(),
                roots_str(rep.minimal_poles).c_str());
  }
  return 0;
}

int cmd_design_decouple(const PlantOptions& opts) {
  const RunConfig cfg = opts.load_config();
  const RealMimo2 m = opts.plant_matrix(cfg);
  const GaTf plant = real_to_ga(m).g;

  const QParam q = decoupling_q(plant);
  const auto adm = q_admissible(q);
  const GaTf ctrl = youla_controller(plant, q);
  const auto rep = verify_decoupled(plant, ctrl);

  std::printf("Q parameter:\n%s\n", q.q.str().c_str());
  std::printf("admissible: %s (denominator hurwitz: %s, proper: %s)\n",
              adm.admissible ? "yes" : "no", adm.denominator_hurwitz ? "yes" : "no",
              adm.all_proper ? "yes" : "no");
  std::printf("controller:\n%s\n", ctrl.str().c_str());
  std::printf("closed-loop diagonal: %s\n",
              rep.diag ? rep.diag->str().c_str() : "(not decoupled)");
  std::printf("off-diagonal residual: %.6e\n", rep.offdiag_residual);
  return rep.offdiag_residual < 1e-8 ? 0 : kExitSynthesis;
}

int cmd_simulate(const PlantOptions& opts, const std::string& ctrl_type, double k,
                 const std::string& out_path, const std::string& svg_path,
                 bool open_loop, double step_mag, double step_time,
                 const std::string& step_channel) {
  RunConfig cfg = opts.load_config();
  if (!ctrl_type.empty()) cfg.controller_type = ctrl_type;
  if (k != 0.0) cfg.k = k;
  if (step_mag >= 0.0) cfg.step_magnitude = step_mag;
  if (step_time >= 0.0) cfg.step_time = step_time;
  if (step_channel == "alpha") cfg.step_channel = 0;
  if (step_channel == "beta") cfg.step_channel = 1;

  SimConfig sim;
  sim.plant = opts.plant_matrix(cfg);
  sim.Ts = cfg.Ts;
  sim.substeps = cfg.substeps;
  sim.duration = cfg.duration;
  sim.source.V = cfg.V;
  sim.source.omega = 2.0 * M_PI * cfg.freq_hz;
  sim.prewarp_omega = 2.0 * M_PI * cfg.freq_hz;
  sim.step.time = cfg.step_time;
  sim.step.channel = cfg.step_channel;
  sim.step.magnitude = cfg.step_magnitude;
  sim.open_loop = open_loop;
  if (!open_loop) sim.controller = configured_controller(cfg, sim.plant);

  SimTrace trace;
  bool diverged = false;
  std::string divergence_note;
  try {
    trace = run_closed_loop(sim, &trace);
  } catch (const DivergedError& e) {
    diverged = true;
    divergence_note = e.what();
  }

  if (!out_path.empty()) {
    std::ofstream os(out_path, std::ios::binary);
    write_csv(trace, os);
  } else {
    write_csv(trace, std::cout);
  }
  if (!svg_path.empty()) {
    std::ofstream os(svg_path, std::ios::binary);
    cli::write_svg(trace, os);
  }
  if (diverged) {
    std::fprintf(stderr, "error: %s (partial trace written)\n",
                 divergence_note.c_str());
    return kExitDiverged;
  }
  if (!open_loop && sim.step.magnitude != 0.0) {
    const double metric = decoupling_metric(trace, sim);
    std::fprintf(stderr, "decoupling metric: %.6e of the step magnitude\n", metric);
  }
  return 0;
}

int cmd_discretize(const PlantOptions& opts, const std::string& ctrl_type, double k,
                   double Ts, double prewarp_hz) {
  RunConfig cfg = opts.load_config();
  if (!ctrl_type.empty()) cfg.controller_type = ctrl_type;
  if (k != 0.0) cfg.k = k;

  const RealMimo2 m = opts.plant_matrix(cfg);
  const GaTf ctrl = configured_controller(cfg, m);
  const FilterBank2 bank = realize_ga_controller(ctrl, Ts, 2.0 * M_PI * prewarp_hz);

  static const char* names[2][2] = {{"C(0,0)", "C(0,1)"}, {"C(1,0)", "C(1,1)"}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const auto& f = bank.f[static_cast<size_t>(i)][static_cast<size_t>(j)];
      std::printf("%s b:", names[i][j]);
      for (double v : f.b()) std::printf(" %.17g", v);
      std::printf("\n%s a:", names[i][j]);
      for (double v : f.a()) std::printf(" %.17g", v);
      std::printf("\n");
    }
  return 0;
}

int cmd_netlist_check(const std::string& path) {
  const Netlist nl = parse_netlist(read_file(path));
  std::printf("elements: %zu\n", nl.elements.size());
  std::printf("inputs: %s %s %s\n", nl.inputs[0].c_str(), nl.inputs[1].c_str(),
              nl.inputs[2].c_str());
  std::printf("outputs: %s %s %s\n", nl.outputs[0].c_str(), nl.outputs[1].c_str(),
              nl.outputs[2].c_str());
  const TfMatrix3 m3 = mna_transfer(nl);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      std::printf("H(%d,%d): %s\n", i, j,
                  m3[static_cast<size_t>(i)][static_cast<size_t>(j)].reduced().str().c_str());
  const RealMimo2 m = clarke_project(m3);
  std::printf("alpha/beta projection:\n");
  print_rv(m);
  std::printf("balanced: %s\n", is_balanced(m) ? "yes" : "no");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GA-valued SISO modeling, analysis, synthesis and simulation "
               "of three-phase circuits"};
  app.require_subcommand(1);

  auto* model = app.add_subcommand("model", "print a plant model");
  PlantOptions model_opts;
  model_opts.attach(*model);
  std::string format = "ga";
  model->add_option("--format", format, "rv | cv | ga")
      ->check(CLI::IsMember({"rv", "cv", "ga"}));

  auto* stab = app.add_subcommand("stability", "closed-loop stability table");
  PlantOptions stab_opts;
  stab_opts.attach(*stab);
  double stab_k = 1.0;
  std::vector<double> sweep;
  stab->add_option("--k", stab_k, "proportional controller gain");
  auto* sweep_opt =
      stab->add_option("--sweep", sweep, "kmin kmax steps")->expected(3);

  auto* dec = app.add_subcommand("design-decouple", "synthesize the decoupling controller");
  PlantOptions dec_opts;
  dec_opts.attach(*dec);

  auto* simc = app.add_subcommand("simulate", "run the closed loop in the time domain");
  PlantOptions sim_opts;
  sim_opts.attach(*simc);
  std::string sim_ctrl, out_path, svg_path;
  double sim_k = 0.0;
  bool open_loop = false;
  simc->add_option("--controller", sim_ctrl, "proportional | decoupling | custom");
  simc->add_option("--k", sim_k, "proportional gain");
  simc->add_option("--out", out_path, "trace CSV path (default: stdout)");
  simc->add_option("--svg", svg_path, "optional SVG plot path");
  simc->add_flag("--open-loop", open_loop, "feed references directly (no feedback)");
  double step_mag = -1.0, step_time = -1.0;
  std::string step_channel;
  simc->add_option("--step-magnitude", step_mag,
                   "set-point step amplitude, volts (default 0.1*V; the "
                   "amplitude itself is a modeling choice)");
  simc->add_option("--step-time", step_time, "step instant, seconds");
  simc->add_option("--step-channel", step_channel, "alpha | beta");

  auto* disc = app.add_subcommand("discretize", "print the discrete controller bank");
  PlantOptions disc_opts;
  disc_opts.attach(*disc);
  std::string disc_ctrl;
  double disc_k = 0.0, disc_Ts = 1e-4, prewarp_hz = 60.0;
  disc->add_option("--controller", disc_ctrl, "proportional | decoupling | custom");
  disc->add_option("--k", disc_k, "proportional gain");
  disc->add_option("--Ts", disc_Ts, "sample period, seconds");
  disc->add_option("--prewarp-hz", prewarp_hz, "prewarp frequency, hertz");

  auto* nlchk = app.add_subcommand("netlist-check", "parse and solve a netlist");
  std::string nl_path;
  nlchk->add_option("netlist", nl_path, "netlist file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*model) return cmd_model(model_opts, format);
    if (*stab) return cmd_stability(stab_opts, stab_k, sweep_opt->count() > 0, sweep);
    if (*dec) return cmd_design_decouple(dec_opts);
    if (*simc)
      return cmd_simulate(sim_opts, sim_ctrl, sim_k, out_path, svg_path, open_loop,
                          step_mag, step_time, step_channel);
    if (*disc) return cmd_discretize(disc_opts, disc_ctrl, disc_k, disc_Ts, prewarp_hz);
    if (*nlchk) return cmd_netlist_check(nl_path);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  } catch (const AlgebraicLoopError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitAlgebraicLoop;
  } catch (const PlantNotStableError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSynthesis;
  } catch (const QNotAdmissibleError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSynthesis;
  } catch (const DegeneratePlantError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSynthesis;
  } catch (const NotRealizableError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNotRealizable;
  } catch (const BadPrewarpError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNotRealizable;
  } catch (const SingularError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
