#include <benchmark/benchmark.h>

#include "hl/counting.hpp"
#include "hl/greedy.hpp"

using namespace hl;

static void BM_count_paths_exact_cubic(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = gen_random_cubic(n, {1, 0});
    for (auto _ : state) {
        auto f = count_paths_exact(g, 0, n);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_count_paths_exact_cubic)->Arg(12)->Arg(16)->Arg(20)->Arg(24);

static void BM_alpha_split_cubic(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = gen_random_cubic(n, {1, 0});
    for (auto _ : state) {
        auto s = alpha_split(g, 0, n);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_alpha_split_cubic)->Arg(12)->Arg(16)->Arg(20);

static void BM_run_greedy_cubic(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = gen_random_cubic(n, {1, 0});
    WeightAssignment w = sample_weights(g, {2, 0});
    for (auto _ : state) {
        auto res = run_greedy(g, w, 0, n, GreedyMode::Heavy);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_run_greedy_cubic)->Arg(12)->Arg(16)->Arg(20);

static void BM_run_greedy_sampling_tree(benchmark::State& state) {
    auto [tree, root] = gen_binary_tree(static_cast<int>(state.range(0)));
    WeightAssignment w = sample_weights(tree, {3, 0});
    auto oracle = CountOracle::sampling(500, 5, {4, 0});
    int k = static_cast<int>(state.range(0)) + 1;
    for (auto _ : state) {
        auto res = run_greedy(tree, w, root, k, GreedyMode::Heavy, oracle);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_run_greedy_sampling_tree)->Arg(8)->Arg(10);

static void BM_count_hamilton_cubic(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = gen_random_cubic(n, {5, 0});
    for (auto _ : state) {
        auto h = count_hamilton_cycles(g);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_count_hamilton_cubic)->Arg(10)->Arg(14)->Arg(18);

BENCHMARK_MAIN();
