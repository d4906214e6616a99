#include <benchmark/benchmark.h>

#include "polyb/callan.hpp"
#include "polyb/polybern.hpp"
#include "polyb/recurrences.hpp"
#include "polyb/stirling.hpp"
#include "polyb/tableau.hpp"

using namespace polyb;

static void BM_BhatClosed(benchmark::State& state) {
    const long long n = state.range(0);
    prewarm_stirling(2 * n + 2);
    for (auto _ : state) benchmark::DoNotOptimize(bhat_closed(n, n, 2));
}
BENCHMARK(BM_BhatClosed)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_SeriesOracle(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(pb_poly_value(n, -n, Rational(1)));
}
BENCHMARK(BM_SeriesOracle)->Arg(8)->Arg(16)->Arg(24);

static void BM_Symmetrized(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(symmetrized(n, n, 3));
}
BENCHMARK(BM_Symmetrized)->Arg(6)->Arg(10);

static void BM_CallanPolyClosed(benchmark::State& state) {
    const long long n = state.range(0);
    prewarm_stirling(n + 2);
    for (auto _ : state) benchmark::DoNotOptimize(callan_poly_closed(n, n));
}
BENCHMARK(BM_CallanPolyClosed)->Arg(8)->Arg(16)->Arg(32);

static void BM_EnumTableaux(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        enum_tableaux(n, n, [&](const AltTableau&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumTableaux)->Arg(2)->Arg(3)->Arg(4);

static void BM_EnumBarred(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        enum_barred(n, n, 1, [&](const BarredCallanSequence&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumBarred)->Arg(2)->Arg(3)->Arg(4);

static void BM_TableauPoly2(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tableau_poly2(n, n));
}
BENCHMARK(BM_TableauPoly2)->Arg(3)->Arg(4);

static void BM_StirlingWarm(benchmark::State& state) {
    prewarm_stirling(256);
    for (auto _ : state) benchmark::DoNotOptimize(stirling2(255, 100));
}
BENCHMARK(BM_StirlingWarm);

BENCHMARK_MAIN();
