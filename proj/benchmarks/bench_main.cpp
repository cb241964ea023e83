#include <benchmark/benchmark.h>

#include <memory>

#include "goldbct/equiv.hpp"
#include "goldbct/gold.hpp"
#include "goldbct/sbox.hpp"
#include "goldbct/tables.hpp"
#include "goldbct/weil.hpp"

using namespace goldbct;

static void BM_FieldMul(benchmark::State& state) {
    const Field f(static_cast<int>(state.range(0)));
    const std::uint32_t mask = f.size() - 1;
    std::uint32_t a = 3, b = 5;
    for (auto _ : state) {
        const Element r = f.mul(Element{a & mask}, Element{b & mask});
        benchmark::DoNotOptimize(r);
        a = a * 1103515245u + 12345u;
        b ^= r.bits + 1;
    }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(22);

static void BM_CbctRow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto f = std::make_shared<const Field>(n);
    const SBox fn = SBox::power(f, 3);
    for (auto _ : state) benchmark::DoNotOptimize(cbct_brute(fn, Field::generator(), Field::one(), {1, false}));
}
BENCHMARK(BM_CbctRow)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_WeilRowBrute(benchmark::State& state) {
    const Field f(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(weil_brute_row(f, Field::generator(), 1));
}
BENCHMARK(BM_WeilRowBrute)->Arg(8)->Arg(12);

static void BM_WeilRowClosed(benchmark::State& state) {
    const Field f(static_cast<int>(state.range(0)));
    const WeilClosedForm closed(f, 2);
    for (auto _ : state) benchmark::DoNotOptimize(closed.row(Field::generator()));
}
BENCHMARK(BM_WeilRowClosed)->Arg(8)->Arg(12);

static void BM_GoldEvaluator(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto f = std::make_shared<const Field>(n);
    auto cls = std::make_shared<const PairClassifier>(f, 2);
    const Element c = Field::generator();
    const GoldTheorem th = theorem_for(*f, c, cls->params());
    for (auto _ : state) {
        const GoldEvaluator ev(cls, th, c);
        benchmark::DoNotOptimize(ev.evaluate(Field::one()));
    }
}
BENCHMARK(BM_GoldEvaluator)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Table1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(compute_table1({1, false}));
}
BENCHMARK(BM_Table1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
