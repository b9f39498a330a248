// Serial reference kernels against their OpenMP counterparts. The second
// argument of each benchmark is the thread count; 1 runs the serial kernel.

#include <benchmark/benchmark.h>

#include "domrecon/domination.hpp"
#include "domrecon/families.hpp"
#include "domrecon/reconfig.hpp"
#include "domrecon/scan.hpp"

using namespace domrecon;

namespace {

Graph sample(int n) { return generate(family::RandomGnp{n, 0.25, 17}); }

void BM_EnumerateMds(benchmark::State& state) {
    const Graph g = sample(static_cast<int>(state.range(0)));
    EnumerationOptions opts;
    opts.threads = static_cast<int>(state.range(1));
    std::size_t count = 0;
    for (auto _ : state) {
        const MdsCollection sets = opts.threads > 1 ? enumerate_mds_parallel(g, opts) : enumerate_mds_serial(g, opts);
        count = sets.size();
        benchmark::DoNotOptimize(count);
    }
    state.counters["sets"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateMds)->ArgsProduct({{16, 20, 24}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_ExhaustiveMds(benchmark::State& state) {
    const Graph g = sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_mds_exhaustive(g).size());
}
BENCHMARK(BM_ExhaustiveMds)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ReconfigEdges(benchmark::State& state) {
    const Graph g = sample(static_cast<int>(state.range(0)));
    const MdsCollection sets = enumerate_mds(g);
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto edges = threads > 1 ? reconfig_edges_parallel(g, sets, ReconfigKind::Full, threads)
                                 : reconfig_edges_serial(g, sets, ReconfigKind::Full);
        benchmark::DoNotOptimize(edges.data());
    }
    state.counters["sets"] = static_cast<double>(sets.size());
}
BENCHMARK(BM_ReconfigEdges)->ArgsProduct({{16, 20}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_ScanAllSeven(benchmark::State& state) {
    const Corpus corpus = load_corpus("all:7");
    ScanOptions opts;
    opts.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scan_corpus(corpus, {"tree_conjecture"}, opts).size());
}
BENCHMARK(BM_ScanAllSeven)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
