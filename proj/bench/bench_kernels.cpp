#include <benchmark/benchmark.h>

#include <random>

#include "exh/deriv.hpp"
#include "exh/exhauster.hpp"
#include "exh/kernels.hpp"

using namespace exh;

namespace {

// The first two groups contradict each other on x1, so every combination is
// infeasible and the whole product is scanned.
ChoiceProduct hard_product(int groups, int alts) {
  ChoiceProduct p(groups);
  for (int i = 0; i < groups; ++i) {
    for (int a = 0; a < alts; ++a) {
      double t = 0.3 * i + 0.7 * a;
      Vector n = i == 0 ? Vector{1.0 + a, 0.0} : i == 1 ? Vector{-1.0 - a, 0.0} : Vector{std::cos(t), std::sin(t)};
      p[i].alternatives.push_back({{n, i < 2 ? Sense::GeOne : Sense::LeZero}});
    }
  }
  return p;
}

Expr bench_expr() {
  auto lin = [](double a, double b) { return Expr::atom(SmoothAtom::linear(Vector{a, b})); };
  auto q = Expr::atom(SmoothAtom(2, {{0.5, {2, 0}}, {0.5, {0, 2}}, {1, {1, 0}}, {-1, {0, 1}}}));
  return Expr::min({Expr::max({lin(1, 0), lin(-1, 1), q}), Expr::max({lin(0, -1), lin(2, 1)})});
}

void BM_FirstFeasible(benchmark::State& s, bool parallel) {
  auto p = hard_product(6, static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(first_feasible(p, 2, {}, parallel));
}

void BM_OracleScan(benchmark::State& s, bool parallel) {
  Vector x{0, 0};
  auto t = directional_derivative_tree(bench_expr(), x);
  auto dirs = sample_directions(2, static_cast<int>(s.range(0)), 1);
  for (auto _ : s) {
    benchmark::DoNotOptimize(parallel ? oracle_scan_parallel(t, t, dirs, OptSense::Min, 1e-9, 1e-6)
                                      : oracle_scan_serial(t, t, dirs, OptSense::Min, 1e-9, 1e-6));
  }
}

void BM_FdDeviation(benchmark::State& s, bool parallel) {
  Vector x{0, 0};
  Expr e = bench_expr();
  auto t = directional_derivative_tree(e, x);
  auto dirs = sample_directions(2, static_cast<int>(s.range(0)), 1);
  for (auto _ : s) {
    benchmark::DoNotOptimize(parallel ? fd_deviation_parallel(e, x, t, dirs) : fd_deviation_serial(e, x, t, dirs));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_FirstFeasible, serial, false)->Arg(3)->Arg(5);
BENCHMARK_CAPTURE(BM_FirstFeasible, parallel, true)->Arg(3)->Arg(5);
BENCHMARK_CAPTURE(BM_OracleScan, serial, false)->Arg(10000)->Arg(100000);
BENCHMARK_CAPTURE(BM_OracleScan, parallel, true)->Arg(10000)->Arg(100000);
BENCHMARK_CAPTURE(BM_FdDeviation, serial, false)->Arg(720)->Arg(7200);
BENCHMARK_CAPTURE(BM_FdDeviation, parallel, true)->Arg(720)->Arg(7200);

BENCHMARK_MAIN();
