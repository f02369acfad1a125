#include <benchmark/benchmark.h>

#include <memory>

#include "rsavg/average.hpp"
#include "rsavg/brandt.hpp"
#include "rsavg/kernel.hpp"
#include "rsavg/lattice.hpp"
#include "rsavg/repnum.hpp"

using namespace rsavg;

namespace {

std::shared_ptr<ClassGroup const> group(i64 D)
{
    return std::make_shared<ClassGroup const>(FundamentalDiscriminant::validate(D));
}

void BM_ClassGroup(benchmark::State & state)
{
    i64 const D = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(ClassGroup(FundamentalDiscriminant::validate(D)).h());
}
BENCHMARK(BM_ClassGroup)->Arg(23)->Arg(1999)->Arg(99991);

void BM_RepTable(benchmark::State & state)
{
    auto const G = group(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(RepTable(G, state.range(1)).R(1));
}
BENCHMARK(BM_RepTable)->Args({23, 1000})->Args({1999, 1000});

void BM_KernelSeries(benchmark::State & state)
{
    auto const G = group(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(KernelSeries(G, state.range(1), 2, 20).b(0, 20));
}
BENCHMARK(BM_KernelSeries)->Args({23, 5})->Args({47, 13})->Unit(benchmark::kMillisecond);

void BM_Average(benchmark::State & state)
{
    auto const G = group(state.range(0));
    i64 const N = state.range(1);
    auto const psi = characters(G).front();
    auto const aux = auxiliary_prime(*G, N, 10);
    for (auto _ : state) benchmark::DoNotOptimize(theorem1_rhs(*G, N, 2, psi, 10, aux).phi_terms);
}
BENCHMARK(BM_Average)->Args({23, 5})->Args({311, 11})->Unit(benchmark::kMillisecond);

void BM_BuildBrandt(benchmark::State & state)
{
    for (auto _ : state) benchmark::DoNotOptimize(build_module(state.range(0), 20).size());
}
BENCHMARK(BM_BuildBrandt)->Arg(11)->Arg(97)->Arg(389)->Unit(benchmark::kMillisecond);

void BM_ShortVectors(benchmark::State & state)
{
    auto const O = maximal_order(state.range(0));
    auto const gram = to_small(lll_gram(norm_gram(O)).gram);
    for (auto _ : state) benchmark::DoNotOptimize(count_by_value(gram, state.range(1)).back());
}
BENCHMARK(BM_ShortVectors)->Args({97, 200})->Args({389, 400});

}  // namespace
BENCHMARK_MAIN();
