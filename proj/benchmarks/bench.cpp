#include <benchmark/benchmark.h>

#include "dichro/chordal.hpp"
#include "dichro/coloring.hpp"
#include "dichro/constructions.hpp"
#include "dichro/patterns.hpp"

using namespace dichro;

namespace {

// Worst case for the induced-subdigraph search: the pattern is absent, so
// every candidate assignment is exhausted.
void BM_PatternSearchAbsent(benchmark::State& state) {
    const Digraph host = delta122_witness(4);
    const Digraph pattern = delta1(2, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(contains_induced(host, pattern));
}
BENCHMARK(BM_PatternSearchAbsent);

void BM_PatternSearchPresent(benchmark::State& state) {
    const Digraph host = delta122_witness(4);
    const Digraph pattern = c3();
    for (auto _ : state)
        benchmark::DoNotOptimize(contains_induced(host, pattern));
}
BENCHMARK(BM_PatternSearchPresent);

// The branch-and-bound solver at the largest size it certifies exactly in
// the generator reports.
void BM_ExactSolverLevel3(benchmark::State& state) {
    const Digraph d = delta122_witness(3);
    for (auto _ : state) benchmark::DoNotOptimize(dichromatic_number(d));
}
BENCHMARK(BM_ExactSolverLevel3);

void BM_InfeasibilityProof(benchmark::State& state) {
    const Digraph d = delta122_witness(3);
    for (auto _ : state) benchmark::DoNotOptimize(is_k_dicolorable(d, 2));
}
BENCHMARK(BM_InfeasibilityProof);

// Chordality at witness scale: 2280 vertices, 8679 arcs.
void BM_ChordalityLargeWitness(benchmark::State& state) {
    const Digraph d = c3k1_witness(3);
    const UndirectedGraph g = underlying_graph(d);
    for (auto _ : state) benchmark::DoNotOptimize(is_chordal(g));
}
BENCHMARK(BM_ChordalityLargeWitness);

void BM_TransitiveSetEnumeration(benchmark::State& state) {
    const Digraph amp = rainbow_amplifier(c3k1_witness(2), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_transitive_sets(amp, std::nullopt));
}
BENCHMARK(BM_TransitiveSetEnumeration);

void BM_UnitIntervalColoring(benchmark::State& state) {
    const RandomUnitIntervalInstance inst =
        random_unit_interval_orientation(200, 1, 20.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(color_unit_interval(inst.digraph, inst.rep));
}
BENCHMARK(BM_UnitIntervalColoring);

}  // namespace

BENCHMARK_MAIN();
