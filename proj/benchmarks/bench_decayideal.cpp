#include <benchmark/benchmark.h>

#include "decayideal/decay_construction.hpp"
#include "decayideal/decomposition.hpp"

using namespace decayideal;

namespace {

const ConstructionData& flagship() {
  static const ConstructionData data = build(DecaySequence::parse("6,5,5,4,2,1"), 6);
  return data;
}

void BM_Power(benchmark::State& state) {
  const auto e = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ideal_power(flagship().ideal, e));
}
BENCHMARK(BM_Power)->DenseRange(1, 7);

void BM_AssSplit(benchmark::State& state) {
  auto power = ideal_power(flagship().ideal, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(associated_primes_split(power));
  state.counters["generators"] = static_cast<double>(power.size());
}
BENCHMARK(BM_AssSplit)->DenseRange(1, 7)->Unit(benchmark::kMicrosecond);

void BM_AssWitness(benchmark::State& state) {
  auto power = ideal_power(flagship().ideal, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(associated_primes_witness(power));
  state.counters["box"] = static_cast<double>(witness_box_size(power));
}
BENCHMARK(BM_AssWitness)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Build(benchmark::State& state) {
  auto q = DecaySequence::parse("9,7,7,6,4,3,3,1");
  for (auto _ : state) benchmark::DoNotOptimize(build(q, 8));
}
BENCHMARK(BM_Build);

}  // namespace
BENCHMARK_MAIN();
