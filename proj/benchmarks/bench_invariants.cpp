// Microbenchmarks for the two bracket paths and the surgery sum.

#include "qlink/modular.hpp"
#include "qlink/rt.hpp"
#include "qlink/skein.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace qlink;

BraidWord torus_braid(int crossings) {
    BraidWord b;
    b.strands = 2;
    for (int i = 0; i < crossings; ++i) b.letters.emplace_back(1, 1);
    return b;
}

BraidWord random_braid(int strands, int letters, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1);
    BraidWord b;
    b.strands = strands;
    for (int i = 0; i < letters; ++i) b.letters.emplace_back(gen(rng), sign(rng) ? 1 : -1);
    return b;
}

void bm_bracket_statesum(benchmark::State& state) {
    LinkDiagram d = braid_closure(random_braid(4, static_cast<int>(state.range(0)), 42));
    for (auto _ : state) benchmark::DoNotOptimize(bracket_statesum(d));
}
BENCHMARK(bm_bracket_statesum)->Arg(6)->Arg(10)->Arg(14);

void bm_bracket_functor(benchmark::State& state) {
    LinkDiagram d = braid_closure(random_braid(4, static_cast<int>(state.range(0)), 42));
    for (auto _ : state) benchmark::DoNotOptimize(bracket_functor(d));
}
BENCHMARK(bm_bracket_functor)->Arg(6)->Arg(10)->Arg(14);

void bm_torus_bracket(benchmark::State& state) {
    LinkDiagram d = braid_closure(torus_braid(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(bracket_statesum(d));
}
BENCHMARK(bm_torus_bracket)->Arg(8)->Arg(12)->Arg(16);

void bm_rt_lens(benchmark::State& state) {
    ModularData md = modular_data(static_cast<long>(state.range(0)));
    SurgeryPresentation lens{LinkDiagram({}, 1), {3}, "U3"};
    for (auto _ : state) benchmark::DoNotOptimize(rt_invariant(lens, md).corrected);
}
BENCHMARK(bm_rt_lens)->Arg(3)->Arg(5);

void bm_modular_data(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(modular_data(static_cast<long>(state.range(0))));
}
BENCHMARK(bm_modular_data)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
