#include <benchmark/benchmark.h>

#include "epp/curve.hpp"
#include "epp/enumeration.hpp"
#include "epp/protocols.hpp"

namespace {

const epp::BellDiagonal kInput(0.75, 0.1, 0.08, 0.07);

void BM_recurrence_step(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(epp::recurrence_step(kInput));
  }
}
BENCHMARK(BM_recurrence_step);

void BM_four_pair_numeric(benchmark::State& state) {
  const auto table = epp::product_table(kInput, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(epp::four_pair_exact(table));
  }
}
BENCHMARK(BM_four_pair_numeric);

void BM_four_pair_closed_general(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(epp::four_pair_closed_form_general(kInput));
  }
}
BENCHMARK(BM_four_pair_closed_general);

void BM_block_yield(benchmark::State& state) {
  const int block_size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(epp::block_yield(kInput, block_size));
  }
}
BENCHMARK(BM_block_yield)->Arg(16)->Arg(64);

void BM_best_block_yield(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(epp::best_block_yield(kInput, 64));
  }
}
BENCHMARK(BM_best_block_yield);

void BM_evaluate_curve_point(benchmark::State& state) {
  epp::CurveOptions options;
  options.max_rounds = 16;
  options.max_block = 16;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        epp::evaluate_curve_point(kInput, kInput.fidelity(), options));
  }
}
BENCHMARK(BM_evaluate_curve_point);

}  // namespace

BENCHMARK_MAIN();
