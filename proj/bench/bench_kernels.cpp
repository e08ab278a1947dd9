#include "bipramsey/graph.hpp"
#include "bipramsey/ramsey.hpp"
#include "bipramsey/random.hpp"
#include "bipramsey/reference.hpp"
#include "bipramsey/regularity.hpp"

#include <benchmark/benchmark.h>

using namespace bipramsey;

namespace {

VertexPair random_pair(int size, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (uniform_below(rng, 2) == 0)
                edges.emplace_back(i, j);
    return VertexPair(size, size, edges);
}

// Random pairs are usually regular at this eps, so every X mask is visited.
void BM_RegularityExhaustive(benchmark::State& state) {
    const VertexPair p = random_pair(static_cast<int>(state.range(0)), 7);
    const int workers = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(eps_regular_exhaustive(p, Rational(1, 3), workers).regular);
}
BENCHMARK(BM_RegularityExhaustive)->ArgsProduct({{10, 12, 14, 16}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_RegularityBrute(benchmark::State& state) {
    const VertexPair p = random_pair(static_cast<int>(state.range(0)), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::eps_regular_brute(p, Rational(1, 3)).regular);
}
BENCHMARK(BM_RegularityBrute)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RamseyPaths(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::vector<TargetGraph> targets{make_path(n), make_path(n)};
    RamseySearchOptions opts;
    opts.n_max = n;
    opts.workers = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(bipartite_ramsey_exact(targets, opts).value);
}
BENCHMARK(BM_RamseyPaths)->ArgsProduct({{4, 5}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_RamseyCycles(benchmark::State& state) {
    const std::vector<TargetGraph> targets{make_even_cycle(6), make_even_cycle(4)};
    RamseySearchOptions opts;
    opts.n_max = 4;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bipartite_ramsey_exact(targets, opts).value);
}
BENCHMARK(BM_RamseyCycles)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_AvoidingBrute(benchmark::State& state) {
    const std::vector<TargetGraph> targets{make_path(3), make_path(3)};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::avoiding_colouring_exists(targets, n));
}
BENCHMARK(BM_AvoidingBrute)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
