#include <cmath>

#include <benchmark/benchmark.h>

#include "freebound/btm.hpp"
#include "freebound/dual_value.hpp"
#include "freebound/fd_obstacle.hpp"
#include "freebound/gca.hpp"
#include "freebound/primal.hpp"

namespace {

using namespace freebound;

Problem reference_problem(bool non_hara) {
    const ModelParams m{0.1, 0.05, 0.3, 0.1, 1.0, 1.0};
    return Problem(m, non_hara ? DualUtilityFamily::non_hara(1.0) : DualUtilityFamily::power(0.5, 1.0));
}

void BM_GcaBoundary(benchmark::State& state) {
    const auto pr = reference_problem(state.range(0) != 0);
    for (auto _ : state) {
        const GcaBoundary g(pr);
        benchmark::DoNotOptimize(g.z_at(pr.derived().tau_max));
    }
}
BENCHMARK(BM_GcaBoundary)->Arg(0)->Arg(1);

void BM_DualValue(benchmark::State& state) {
    const GcaBoundary g(reference_problem(true));
    const DualValueEvaluator dv(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dv.second_derivative(0.0, 1.58));
    }
}
BENCHMARK(BM_DualValue);

void BM_PrimalSolve(benchmark::State& state) {
    const PrimalSolver solver{GcaBoundary(reference_problem(true))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(solver.solve(0.0, 1.5).value);
    }
}
BENCHMARK(BM_PrimalSolve)->Unit(benchmark::kMicrosecond);

void BM_AmericanTree(benchmark::State& state) {
    const auto pr = reference_problem(true);
    const TreeConfig cfg{static_cast<int>(state.range(0)), 1.58, false};
    for (auto _ : state) {
        benchmark::DoNotOptimize(tree_value(pr, cfg, true).value_at_root);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AmericanTree)->RangeMultiplier(2)->Range(100, 1600)->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);

void BM_FdObstacle(benchmark::State& state) {
    const auto pr = reference_problem(true);
    auto cfg = FdConfig::defaults(pr);
    cfg.n_z = static_cast<int>(state.range(0));
    cfg.n_tau = cfg.n_z / 3;
    cfg.keep_surface = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_obstacle(pr, cfg).boundary.back());
    }
}
BENCHMARK(BM_FdObstacle)->Arg(300)->Arg(600)->Arg(1200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
