#include <benchmark/benchmark.h>

#include "melon/concavity.hpp"
#include "melon/families.hpp"

namespace fam = melon::families;

namespace {

void BM_BananaClass(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fam::b_poly(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BananaClass)->Arg(50)->Arg(200);

void BM_ClosedFormCoefficient(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fam::coeff_closed_form(fam::FamilyTag::G, m, 17, 4));
}
BENCHMARK(BM_ClosedFormCoefficient)->Arg(50)->Arg(200);

void BM_ClaspedNecklace(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fam::clasped_necklace_class(m, m));
}
BENCHMARK(BM_ClaspedNecklace)->Arg(10)->Arg(30);

void BM_UlcCheck(benchmark::State& state) {
  const auto c = fam::h_poly(static_cast<int>(state.range(0))).poly.coeffs();
  for (auto _ : state) benchmark::DoNotOptimize(melon::concavity::check_ulc(c));
}
BENCHMARK(BM_UlcCheck)->Arg(50)->Arg(500);

}  // namespace
