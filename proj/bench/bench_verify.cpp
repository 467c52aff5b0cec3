// Serial against OpenMP batch verification on the same seeded instances.

#include <benchmark/benchmark.h>

#include "snc/suite.hpp"

using namespace snc;

namespace {

std::vector<FormulaInstance> batch(std::size_t n) {
  Rng rng(42);
  std::vector<FormulaInstance> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string id = "b" + std::to_string(i);
    out.push_back(i % 2 ? gen_max_affine_instance(rng, id) : gen_qc_instance(rng, id));
  }
  return out;
}

void BM_VerifySerial(benchmark::State& state) {
  const auto ins = batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_batch_serial(ins));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto ins = batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_batch_parallel(ins));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SipLevels(benchmark::State& state) {
  const auto in = circle_tangent_instance();
  for (auto _ : state) benchmark::DoNotOptimize(check_sip_linear(in, Rational(1), {4, 5, 6, 7, 8}));
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SipLevels)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
