#include <benchmark/benchmark.h>

#include "melon/melonic.hpp"

namespace mel = melon::melonic;

namespace {

void BM_ClassOfNecklace(benchmark::State& state) {
  const auto c = mel::clasped_necklace(3, static_cast<int>(state.range(0)));
  // Fresh calculator each time so the memo does not hide the recursion.
  for (auto _ : state) benchmark::DoNotOptimize(mel::class_of(c));
}
BENCHMARK(BM_ClassOfNecklace)->Arg(4)->Arg(8);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mel::enumerate_constructions(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ClassOfAll(benchmark::State& state) {
  const auto all = mel::enumerate_constructions(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    mel::ClassCalculator calc;
    for (const auto& c : all) benchmark::DoNotOptimize(calc.class_of(c));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_ClassOfAll)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
