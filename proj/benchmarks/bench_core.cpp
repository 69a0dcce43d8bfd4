#include <djg/aux_graphs.hpp>
#include <djg/chi.hpp>
#include <djg/cycles.hpp>
#include <djg/extremal.hpp>
#include <djg/random.hpp>

#include <benchmark/benchmark.h>

using namespace djg;

namespace {
    // args: n, k
    void BM_BuildGraph(benchmark::State & state)
    {
        auto n = static_cast<int>(state.range(0));
        auto k = static_cast<int>(state.range(1));
        for (auto _ : state)
            benchmark::DoNotOptimize(build_graph(n, k));
        state.counters["edges"] = static_cast<double>(build_graph(n, k)->edge_count());
    }
    BENCHMARK(BM_BuildGraph)->Args({ 7, 3 })->Args({ 9, 4 })->Args({ 11, 5 })->Args({ 14, 4 });

    // args: n, k, length
    void BM_CountCycles(benchmark::State & state)
    {
        auto s = EdgeSubgraph::full(build_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
        auto length = static_cast<int>(state.range(2));
        std::uint64_t count = 0;
        for (auto _ : state)
            count = count_cycles(s, length).count;
        state.counters["cycles"] = static_cast<double>(count);
    }
    BENCHMARK(BM_CountCycles)->Args({ 7, 3, 6 })->Args({ 7, 3, 8 })->Args({ 7, 3, 10 })->Args({ 9, 4, 6 })->Args({ 9, 4, 8 });

    void BM_Girth(benchmark::State & state)
    {
        auto s = EdgeSubgraph::full(build_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
        for (auto _ : state)
            benchmark::DoNotOptimize(girth(s));
    }
    BENCHMARK(BM_Girth)->Args({ 7, 3 })->Args({ 9, 4 })->Args({ 10, 3 });

    void BM_ChiVector(benchmark::State & state)
    {
        auto g = build_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
        auto hexagons = enumerate_cycles(EdgeSubgraph::full(g), 6).cycles;
        Rng rng{ 1 };
        auto s = random_subgraph(g, rng, 1, 2);
        for (auto _ : state)
            benchmark::DoNotOptimize(chi_vector(s, hexagons));
    }
    BENCHMARK(BM_ChiVector)->Args({ 7, 3 })->Args({ 9, 4 });

    void BM_HxIdentity(benchmark::State & state)
    {
        auto g = build_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
        Rng rng{ 2 };
        auto s = random_subgraph(g, rng, 1, 2);
        for (auto _ : state)
            benchmark::DoNotOptimize(check_hx_identity(s, Part::lower));
    }
    BENCHMARK(BM_HxIdentity)->Args({ 7, 3 })->Args({ 9, 4 });

    // args: n, k, length
    void BM_ExactExtremal(benchmark::State & state)
    {
        auto g = build_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
        auto length = static_cast<int>(state.range(2));
        std::size_t value = 0;
        for (auto _ : state)
            value = exact_extremal(g, length).value;
        state.counters["value"] = static_cast<double>(value);
    }
    BENCHMARK(BM_ExactExtremal)->Args({ 5, 2, 6 })->Args({ 5, 2, 8 })->Args({ 6, 2, 6 })->Unit(benchmark::kMillisecond);

    void BM_HeuristicExtremal(benchmark::State & state)
    {
        auto g = build_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
        auto length = static_cast<int>(state.range(2));
        std::size_t value = 0;
        for (auto _ : state)
            value = heuristic_extremal(g, length).value;
        state.counters["value"] = static_cast<double>(value);
    }
    BENCHMARK(BM_HeuristicExtremal)->Args({ 7, 3, 6 })->Args({ 7, 3, 8 })->Args({ 7, 3, 14 })->Unit(benchmark::kMillisecond);
}

BENCHMARK_MAIN();
