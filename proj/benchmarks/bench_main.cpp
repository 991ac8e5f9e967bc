#include <benchmark/benchmark.h>

#include "dmagic/constructions.hpp"
#include "dmagic/enumerate.hpp"
#include "dmagic/fracdom.hpp"
#include "dmagic/generators.hpp"
#include "dmagic/solver.hpp"

using namespace dmagic;

namespace {

void BM_SolveCycleSingleton(benchmark::State& state)
{
    const auto k = static_cast<std::size_t>(state.range(0));
    auto g = cycle(4 * k);
    for (auto _ : state) benchmark::DoNotOptimize(solve(g, {static_cast<int>(k)}));
}
BENCHMARK(BM_SolveCycleSingleton)->DenseRange(1, 4);

// No screen fires here, so this measures the search itself.
void BM_SolveNoScreens(benchmark::State& state)
{
    auto g = cycle(static_cast<std::size_t>(state.range(0)));
    SearchOptions opts;
    opts.use_screeners = false;
    for (auto _ : state) benchmark::DoNotOptimize(solve(g, {2}, opts));
}
BENCHMARK(BM_SolveNoScreens)->Arg(9)->Arg(10)->Arg(11);

void BM_CountAllDiam3(benchmark::State& state)
{
    auto g = diam3_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_all(g, {1, 2}));
}
BENCHMARK(BM_CountAllDiam3)->Arg(3);

void BM_GammaF(benchmark::State& state)
{
    auto g = diam3_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_f(g, {1, 2}));
}
BENCHMARK(BM_GammaF)->Arg(3)->Arg(6)->Arg(10);

void BM_CanonicalForm(benchmark::State& state)
{
    auto graphs = enumerate_graphs(7);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalForm);

void BM_GraphConstruction(benchmark::State& state)
{
    auto g = h_np(static_cast<std::size_t>(state.range(0)), 3);
    auto edges = g.edges();
    for (auto _ : state) benchmark::DoNotOptimize(Graph(g.order(), edges));
}
BENCHMARK(BM_GraphConstruction)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
