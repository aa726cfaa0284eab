// Cost of one step per scheme on the pendulum, p0 = 1.8, h = 0.25, and of the
// building blocks the implicit schemes call every iteration.

#include <benchmark/benchmark.h>

#include "hamint/harness.hpp"
#include "hamint/reference.hpp"
#include "hamint/systems.hpp"

namespace {

using namespace hamint;

void BM_Step(benchmark::State& state, const char* id) {
  const HamiltonianSystem sys = pendulum();
  Stepper stepper(parse_scheme(id), sys, 0.25);
  PhaseState s{0.0, 1.8, 0.0};
  std::int64_t iterations = 0;
  for (auto _ : state) {
    s = stepper.step(s);
    iterations += stepper.last_iterations();
    benchmark::DoNotOptimize(s);
  }
  state.counters["fp_iter"] = benchmark::Counter(static_cast<double>(iterations), benchmark::Counter::kAvgIterations);
}

BENCHMARK_CAPTURE(BM_Step, gr, "gr");
BENCHMARK_CAPTURE(BM_Step, mod_gr, "mod-gr");
BENCHMARK_CAPTURE(BM_Step, gr_lex, "gr-lex");
BENCHMARK_CAPTURE(BM_Step, gr_slex, "gr-slex");
BENCHMARK_CAPTURE(BM_Step, gr_3, "gr-3");
BENCHMARK_CAPTURE(BM_Step, gr_7, "gr-7");
BENCHMARK_CAPTURE(BM_Step, lf, "lf");
BENCHMARK_CAPTURE(BM_Step, rk4, "rk4");
BENCHMARK_CAPTURE(BM_Step, tay_5, "tay-5");
BENCHMARK_CAPTURE(BM_Step, tay_10, "tay-10");
BENCHMARK_CAPTURE(BM_Step, sp_4, "sp-4");
BENCHMARK_CAPTURE(BM_Step, sp_8, "sp-8");

void BM_DeltaSeries(benchmark::State& state) {
  const HamiltonianSystem sys = pendulum();
  const int order = static_cast<int>(state.range(0));
  const PhaseState s{0.3, 1.2, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(delta_series_coeffs(sys, s, order));
}
BENCHMARK(BM_DeltaSeries)->DenseRange(3, 15, 4);

void BM_TaylorCoeffs(benchmark::State& state) {
  const HamiltonianSystem sys = pendulum();
  const int order = static_cast<int>(state.range(0));
  const PhaseState s{0.3, 1.2, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(taylor_flow_coeffs(sys, s, order));
}
BENCHMARK(BM_TaylorCoeffs)->DenseRange(4, 16, 4);

void BM_ExactPendulum(benchmark::State& state) {
  const PendulumOrbit orbit = pendulum_orbit(1.8);
  std::int64_t n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pendulum_exact_at_step(orbit, ++n, 0.25));
}
BENCHMARK(BM_ExactPendulum);

void BM_DividedDifferenceGeneral(benchmark::State& state) {
  // Non-separable H without closed-form divided differences.
  const HamiltonianSystem sys = make_system("crossterm:0.3");
  const PhaseState a{0.4, -0.9, 0.0};
  const PhaseState b{0.4 + 1e-3, -0.9 + 2e-3, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(momentum_divided_difference(sys, a, b));
}
BENCHMARK(BM_DividedDifferenceGeneral);

}  // namespace

BENCHMARK_MAIN();
