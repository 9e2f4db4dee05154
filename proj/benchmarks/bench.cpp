#include <benchmark/benchmark.h>

#include "mct/dupont.hpp"
#include "mct/freelie.hpp"
#include "mct/linfty.hpp"
#include "mct/mcspace.hpp"
#include "mct/trees.hpp"

using namespace mct;

static void BM_bch(benchmark::State& state) {
  FreeLieCtx ctx{{0, 0}, static_cast<int>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(bch(ctx, fl_gen(0), fl_gen(1)));
}
BENCHMARK(BM_bch)->Arg(3)->Arg(4)->Arg(5);

static void BM_dupont_verify(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_contraction(static_cast<int>(state.range(0)), 4));
}
BENCHMARK(BM_dupont_verify)->Arg(1)->Arg(2);

static void BM_rooted_trees(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_rooted(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_rooted_trees)->Arg(4)->Arg(5);

static void BM_transfer_cells(benchmark::State& state) {
  FreeNilpotentLie g = freelie_to_slinfty({-1, -1}, 2);
  TensorAlg alg{&g.algebra, FormCtx{1}};
  for (auto _ : state)
    benchmark::DoNotOptimize(transfer_cells(alg, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_transfer_cells)->Arg(2)->Arg(3);

static void BM_interval_model(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_mcinf1(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_interval_model)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
