#include "ndg/decompose.hpp"
#include "ndg/lab.hpp"
#include "ndg/lemma.hpp"
#include "ndg/multigraph.hpp"

#include <benchmark/benchmark.h>

#include <numeric>

namespace {

ndg::Graph random_graph(int n, int D, uint64_t seed) {
    return ndg::gen_regular_kfree(n, D, seed);
}

void bm_descend_phi(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ndg::Graph g = random_graph(n, 8, 7);
    ndg::AlphaVector av = ndg::alpha_split(8, 3);
    for (auto _ : state) {
        ndg::Coloring col(n);
        for (int v = 0; v < n; ++v)
            col[v] = v % av.k() + 1;
        benchmark::DoNotOptimize(ndg::descend_phi(g, std::move(col), av));
    }
}
BENCHMARK(bm_descend_phi)->Arg(64)->Arg(256)->Arg(1024);

void bm_peel(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ndg::Graph g = random_graph(n, 6, 11);
    ndg::MultiGraph mg = ndg::MultiGraph::from_graph(g);
    ndg::VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(ndg::peel(mg, all, 7));
}
BENCHMARK(bm_peel)->Arg(256)->Arg(1024)->Arg(4096);

void bm_lemma_solve(benchmark::State& state) {
    ndg::LemmaInstance inst = ndg::gen_lemma_instance(150, 4, 84, 3, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(ndg::solve(inst, 1));
}
BENCHMARK(bm_lemma_solve);

} // namespace

BENCHMARK_MAIN();
