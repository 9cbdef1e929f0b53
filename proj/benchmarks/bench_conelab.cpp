#include <benchmark/benchmark.h>

#include "conelab/catalog.hpp"
#include "conelab/cone.hpp"
#include "conelab/jordan.hpp"
#include "conelab/lyapunov.hpp"
#include "conelab/rng.hpp"
#include "conelab/symmetry.hpp"

namespace {

using namespace conelab;

void BM_DoubleDescription(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Cone q = qpn(n, 2 + (n > 3 ? 1 : 0));
    const auto rows = q.inequalities();
    for (auto _ : state) {
        benchmark::DoNotOptimize(double_description(n, rows));
    }
}
BENCHMARK(BM_DoubleDescription)->Arg(4)->Arg(5)->Arg(6);

void BM_LyapunovRank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const Cone k = orthant(n);
        benchmark::DoNotOptimize(lyapunov_rank(k));
    }
}
BENCHMARK(BM_LyapunovRank)->Arg(4)->Arg(5)->Arg(6);

void BM_OrbitCone(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SplitMix64 rng(7);
    RatVec seed(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < seed.size(); ++i) {
        seed[i] = Rat(static_cast<long>(i) - 1);
    }
    for (auto _ : state) {
        const Cone k = orbit_cone({seed});
        benchmark::DoNotOptimize(k.extreme_rays().size());
    }
}
BENCHMARK(BM_OrbitCone)->Arg(4)->Arg(5);

void BM_JacobiEig(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    SplitMix64 rng(11);
    SymMat x(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) x.set(i, j, rng.next_gaussian());
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigvals_sym(x));
    }
}
BENCHMARK(BM_JacobiEig)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
