#include <benchmark/benchmark.h>

#include "superschur/divpow.hpp"
#include "superschur/schur.hpp"
#include "superschur/schurweyl.hpp"

using namespace superschur;

namespace {

const coeff::Ring kZ = coeff::Ring::integers();

void BM_FpRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::uint64_t p = 10007;
  coeff::FpMatrix m(p, n, n);
  std::uint64_t x = 12345;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      x = x * 6364136223846793005ull + 1442695040888963407ull;
      m.set(r, c, (x >> 33) % p);
    }
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_FpRank)->RangeMultiplier(2)->Range(32, 256)->Complexity(benchmark::oNCubed);

void BM_InvariantOracle(benchmark::State& state) {
  const auto m = supermod::SuperModule::standard(coeff::Ring::integers_mod(7), 2, 2);
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symact::invariants(m, d, 7).rows());
}
BENCHMARK(BM_InvariantOracle)->DenseRange(1, 3);

void BM_GammaTable(benchmark::State& state) {
  const auto a = salg::matrix_superalgebra(salg::clifford1(kZ), 2, 0);
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(divpow::divided_power_algebra(a, d).dim());
}
BENCHMARK(BM_GammaTable)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_SchurAxioms(benchmark::State& state) {
  const auto s = schur::schur_algebra(salg::clifford1(kZ), 2, 2).algebra();
  for (auto _ : state) benchmark::DoNotOptimize(salg::check_superalgebra(s).passed());
}
BENCHMARK(BM_SchurAxioms)->Unit(benchmark::kMillisecond);

void BM_Surjectivity(benchmark::State& state) {
  const auto c1 = salg::clifford1(kZ);
  for (auto _ : state)
    benchmark::DoNotOptimize(schur::composition_surjectivity_check(c1, 2, 2, 2, {1, 1}, {1, 1}, 5).rank);
}
BENCHMARK(BM_Surjectivity)->Unit(benchmark::kMillisecond);

void BM_Bimodule(benchmark::State& state) {
  const auto c1 = salg::clifford1(kZ);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schurweyl::Bimodule(c1, n, 2).dim());
}
BENCHMARK(BM_Bimodule)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_LeftCommutant(benchmark::State& state) {
  const schurweyl::Bimodule b(salg::clifford1(kZ), static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(schurweyl::commutant_basis(b, schurweyl::Side::Left, 5).dim());
}
BENCHMARK(BM_LeftCommutant)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
