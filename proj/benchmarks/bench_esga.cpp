#include <random>

#include <benchmark/benchmark.h>

#include "esga/es_crossover.hpp"
#include "esga/ga_engine.hpp"
#include "esga/two_opt.hpp"

using namespace esga;

namespace {

Instance uniform(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> coord(0, 100000);
    std::vector<Point> pts(n);
    for (auto& p : pts) {
        p = {static_cast<double>(coord(gen)), static_cast<double>(coord(gen))};
    }
    return Instance("uniform" + std::to_string(n), std::move(pts), EdgeWeightKind::Euc2d);
}

/// Two 2-opt tours of the same instance, as found early in a run.
struct Parents {
    Instance inst;
    NeighborLists nbrs;
    Tour pa;
    Tour pb;

    explicit Parents(int n)
        : inst(uniform(n, 17)), nbrs(inst), pa(two_opt_from(inst, nbrs, 1)), pb(two_opt_from(inst, nbrs, 2)) {}

    static Tour two_opt_from(const Instance& inst, const NeighborLists& nbrs, std::uint64_t seed) {
        Rng rng(seed);
        return two_opt(inst, nbrs, random_tour(inst.size(), rng), rng);
    }
};

void BM_NeighborLists(benchmark::State& state) {
    const auto inst = uniform(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(NeighborLists(inst));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NeighborLists)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_TwoOpt(benchmark::State& state) {
    const auto inst = uniform(static_cast<int>(state.range(0)), 5);
    const NeighborLists nbrs(inst);
    Rng rng(1);
    for (auto _ : state) {
        auto start = random_tour(inst.size(), rng);
        benchmark::DoNotOptimize(two_opt(inst, nbrs, std::move(start), rng));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TwoOpt)->RangeMultiplier(4)->Range(256, 4096)->Complexity()->Unit(benchmark::kMillisecond);

void BM_PartitionRings(benchmark::State& state) {
    const Parents p(static_cast<int>(state.range(0)));
    const auto graph = merge_graphs(p.pa, p.pb);
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(partition_m_rings(graph, rng));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PartitionRings)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

template <class S>
void BM_Crossover(benchmark::State& state) {
    const Parents p(static_cast<int>(state.range(0)));
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(es_crossover(p.inst, p.nbrs, p.pa, p.pb, S{}, 20, rng));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK_TEMPLATE(BM_Crossover, strategy::Single)->RangeMultiplier(4)->Range(256, 4096)->Complexity();
BENCHMARK_TEMPLATE(BM_Crossover, strategy::Random)->RangeMultiplier(4)->Range(256, 4096)->Complexity();
BENCHMARK_TEMPLATE(BM_Crossover, strategy::KMultiple)->RangeMultiplier(4)->Range(256, 4096)->Complexity();
BENCHMARK_TEMPLATE(BM_Crossover, strategy::Block)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_Generation(benchmark::State& state) {
    const auto inst = uniform(static_cast<int>(state.range(0)), 9);
    const NeighborLists nbrs(inst);
    GAConfig cfg;
    cfg.n_pop = 50;
    Rng rng(1);
    const auto initial = init_population(inst, nbrs, cfg, rng);
    for (auto _ : state) {
        auto pop = initial;
        step_generation(pop, inst, nbrs, cfg, rng);
        benchmark::DoNotOptimize(pop.best_length);
    }
}
BENCHMARK(BM_Generation)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
