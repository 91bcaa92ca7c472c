#include <benchmark/benchmark.h>

#include <random>

#include "mbsb/generators.hpp"
#include "mbsb/smawk.hpp"
#include "mbsb/solver.hpp"

using namespace mbsb;

namespace {

ImplicitMatrix monge(int n, std::vector<double>& ro, std::vector<double>& co) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    std::uniform_real_distribution<double> u(-50, 50);
    ro.resize(static_cast<std::size_t>(n));
    co.resize(static_cast<std::size_t>(n));
    for (double& v : ro) v = u(rng);
    for (double& v : co) v = u(rng);
    return ImplicitMatrix{n, n, [&ro, &co](int i, int j) {
                              const double d = static_cast<double>(i) - static_cast<double>(j);
                              return -d * d + ro[static_cast<std::size_t>(i)] +
                                     co[static_cast<std::size_t>(j)];
                          }};
}

void BM_SmawkRowMaxima(benchmark::State& state) {
    std::vector<double> ro, co;
    ImplicitMatrix m = monge(static_cast<int>(state.range(0)), ro, co);
    for (auto _ : state) benchmark::DoNotOptimize(row_maxima(m));
    state.SetComplexityN(state.range(0));
}

void BM_NaiveRowMaxima(benchmark::State& state) {
    std::vector<double> ro, co;
    ImplicitMatrix m = monge(static_cast<int>(state.range(0)), ro, co);
    for (auto _ : state) {
        std::vector<RowMax> out(static_cast<std::size_t>(m.rows));
        for (int i = 0; i < m.rows; ++i) {
            RowMax best{0, m.eval(i, 0)};
            for (int j = 1; j < m.cols; ++j) {
                const double v = m.eval(i, j);
                if (v > best.value) best = {j, v};
            }
            out[static_cast<std::size_t>(i)] = best;
        }
        benchmark::DoNotOptimize(out);
    }
    state.SetComplexityN(state.range(0));
}

void BM_Solve(benchmark::State& state) {
    GenSpec gs{"sparse-blockers", 1000, static_cast<std::size_t>(state.range(0)), 42, 4};
    Dataset ds = generate(gs);
    for (auto _ : state) benchmark::DoNotOptimize(solve(ds.red, ds.blue));
    state.SetComplexityN(state.range(0));
}

void BM_BuildScene(benchmark::State& state) {
    GenSpec gs{"sparse-blockers", static_cast<std::size_t>(state.range(0)), 50, 42, 4};
    Dataset ds = generate(gs);
    for (auto _ : state) benchmark::DoNotOptimize(build_scene(ds.red, ds.blue));
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_SmawkRowMaxima)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);
BENCHMARK(BM_NaiveRowMaxima)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_Solve)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK(BM_BuildScene)->RangeMultiplier(8)->Range(1024, 1 << 20)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
