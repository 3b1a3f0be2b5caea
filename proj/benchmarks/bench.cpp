#include <benchmark/benchmark.h>

#include "clawkit/decompose.hpp"
#include "clawkit/edge_graph.hpp"
#include "clawkit/enumerate.hpp"
#include "clawkit/graph.hpp"
#include "clawkit/graph_io.hpp"
#include "clawkit/incidence.hpp"
#include "clawkit/isomorphism.hpp"
#include "clawkit/structure.hpp"

using namespace clawkit;

namespace {

void bm_classify_rook(benchmark::State& state) {
    const Graph g = p9();
    for (auto _ : state) benchmark::DoNotOptimize(classify_theorem1(g));
}
BENCHMARK(bm_classify_rook);

void bm_classify_sweep_n6(benchmark::State& state) {
    for (auto _ : state) {
        std::uint64_t positives = 0;
        enumerate_graphs(6, [&](const Graph& g, std::uint64_t) {
            positives += is_positive(classify_theorem1(g));
        });
        benchmark::DoNotOptimize(positives);
    }
}
BENCHMARK(bm_classify_sweep_n6);

void bm_edge_graph_cycle(benchmark::State& state) {
    const Graph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(edge_graph(g));
}
BENCHMARK(bm_edge_graph_cycle)->Arg(16)->Arg(64);

void bm_induced_embedding_into_rook(benchmark::State& state) {
    const Graph host = p9();
    const Graph pattern = cycle_graph(6);
    for (auto _ : state) benchmark::DoNotOptimize(find_induced_embedding(pattern, host));
}
BENCHMARK(bm_induced_embedding_into_rook);

void bm_decompose_even_cycle(benchmark::State& state) {
    const Graph g = cycle_graph(8);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(bm_decompose_even_cycle);

void bm_gf2_kernel_w24(benchmark::State& state) {
    const BinMatrix w = transpose(build_w(2, 4, 8));
    for (auto _ : state) benchmark::DoNotOptimize(gf2_kernel(w));
}
BENCHMARK(bm_gf2_kernel_w24);

void bm_rational_rank_w34(benchmark::State& state) {
    const RatMatrix w = to_rational(build_w(3, 4, 10));
    for (auto _ : state) benchmark::DoNotOptimize(rational_rank(w));
}
BENCHMARK(bm_rational_rank_w34);

void bm_graph6_roundtrip(benchmark::State& state) {
    const std::string text = graph6_encode(p9());
    for (auto _ : state) benchmark::DoNotOptimize(graph6_encode(graph6_decode(text)));
}
BENCHMARK(bm_graph6_roundtrip);

}  // namespace

BENCHMARK_MAIN();
