#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "ga3ph/analysis.hpp"
#include "ga3ph/clarke.hpp"
#include "ga3ph/mna.hpp"
#include "ga3ph/models.hpp"
#include "ga3ph/netlist.hpp"
#include "ga3ph/sim.hpp"
#include "ga3ph/synthesis.hpp"
#include "helpers.hpp"

using namespace ga3ph;
using namespace ga3ph::test;

namespace {

const char* kReferenceNetlist =
    "Va sa 0 a\nVb sb 0 b\nVc sc 0 c\n"
    "La sa oa 0.003\nLb sb ob 0.030\nLc sc oc 0.003\n"
    "Ra oa n 22.0\nRb ob n 22.0\nRc oc n 22.0\n"
    ".inputs a b c\n.outputs oa ob oc\n";

void BM_GeometricProduct(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto a = random_mv(rng), b = random_mv(rng);
  for (auto _ : state) {
    auto c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_GeometricProduct);

void BM_PolyRoots(benchmark::State& state) {
  const auto deg = static_cast<int>(state.range(0));
  std::mt19937 rng(2);
  const Poly p = random_stable_poly(rng, deg);
  for (auto _ : state) {
    auto roots = poly_roots(p);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(BM_PolyRoots)->Arg(4)->Arg(8)->Arg(12);

void BM_ClosedLoop(benchmark::State& state) {
  const GaTf plant = real_to_ga(build_rl_model({3e-3, 3e-2, 22.0}, false)).g;
  const GaTf ctrl(Multivector<Poly>{Poly{10.0}, Poly{10.0}, Poly::zero(), Poly::zero()},
                  Poly::one());
  for (auto _ : state) {
    auto rep = analyze_closed_loop(plant, ctrl);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_ClosedLoop);

void BM_DecouplingSynthesis(benchmark::State& state) {
  const GaTf plant = real_to_ga(build_rl_model({3e-3, 3e-2, 22.0}, false)).g;
  for (auto _ : state) {
    auto ctrl = youla_controller(plant, decoupling_q(plant));
    benchmark::DoNotOptimize(ctrl);
  }
}
BENCHMARK(BM_DecouplingSynthesis);

void BM_MnaTransfer(benchmark::State& state) {
  const Netlist nl = parse_netlist(kReferenceNetlist);
  for (auto _ : state) {
    auto m = clarke_project(mna_transfer(nl));
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MnaTransfer);

void BM_SimulateClosedLoop(benchmark::State& state) {
  SimConfig cfg;
  cfg.plant = build_rl_model({3e-3, 3e-2, 22.0}, false);
  const GaTf plant = real_to_ga(cfg.plant).g;
  cfg.controller = youla_controller(plant, decoupling_q(plant));
  cfg.duration = 0.02;
  cfg.step.time = 0.01;
  for (auto _ : state) {
    auto tr = run_closed_loop(cfg);
    benchmark::DoNotOptimize(tr);
  }
}
BENCHMARK(BM_SimulateClosedLoop);

}  // namespace

BENCHMARK_MAIN();
