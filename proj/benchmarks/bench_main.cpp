#include "lgapery/apery.hpp"
#include "lgapery/catalog.hpp"
#include "lgapery/constants.hpp"
#include "lgapery/operator.hpp"
#include "lgapery/periods.hpp"
#include "lgapery/quadrature.hpp"

#include <benchmark/benchmark.h>

using namespace lgapery;

namespace {

const LaurentPolynomial& phi(int index) { return catalog().at(static_cast<std::size_t>(index)).phi; }

// Pruned constant-term engine; Arg(0) picks the catalog entry, Arg(1) is N.
void BM_PeriodsPruned(benchmark::State& state) {
    const auto& p = phi(static_cast<int>(state.range(0)));
    const auto N = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(period_sequence(p, N));
    state.SetLabel(catalog()[static_cast<std::size_t>(state.range(0))].name);
}
BENCHMARK(BM_PeriodsPruned)->ArgsProduct({{0, 1, 2, 3}, {10, 20, 30}})->Unit(benchmark::kMillisecond);

void BM_PeriodsNaive(benchmark::State& state) {
    const auto& p = phi(static_cast<int>(state.range(0)));
    const auto N = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(period_sequence_naive(p, N));
    state.SetLabel(catalog()[static_cast<std::size_t>(state.range(0))].name);
}
BENCHMARK(BM_PeriodsNaive)->ArgsProduct({{0, 1, 2, 3}, {10, 20}})->Unit(benchmark::kMillisecond);

void BM_Discovery(benchmark::State& state) {
    const auto series = period_sequence(phi(static_cast<int>(state.range(0))), 29).values;
    for (auto _ : state) benchmark::DoNotOptimize(operator_from_series(series));
}
BENCHMARK(BM_Discovery)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_AperyLimit(benchmark::State& state) {
    const auto op = operator_from_series(period_sequence(phi(static_cast<int>(state.range(0))), 29).values).op;
    const auto rec = to_recurrence(op);
    const auto singular = singular_points(op);
    const auto digits = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(apery_limit(rec, singular, digits, 2000));
}
BENCHMARK(BM_AperyLimit)->ArgsProduct({{0, 3}, {50, 200}})->Unit(benchmark::kMillisecond);

// zeta3() is memoized per precision, so each argument is timed once, cold.
void BM_Zeta3(benchmark::State& state) {
    const auto digits = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zeta3(digits));
}
BENCHMARK(BM_Zeta3)->Arg(100)->Arg(1000)->Arg(3000)->Iterations(1)->Unit(benchmark::kMillisecond);

void BM_Zeta3EulerMaclaurin(benchmark::State& state) {
    const auto digits = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zeta3_euler_maclaurin(digits));
}
BENCHMARK(BM_Zeta3EulerMaclaurin)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_V16Membrane(benchmark::State& state) {
    const auto digits = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(v16_membrane_value(digits));
}
BENCHMARK(BM_V16Membrane)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
