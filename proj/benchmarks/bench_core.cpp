#include <benchmark/benchmark.h>

#include "superfock/algebra.hpp"
#include "superfock/delta.hpp"
#include "superfock/twisted.hpp"
#include "superfock/vosa.hpp"

namespace {

using namespace superfock;

void BM_DeltaCoefficients(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_coefficients(2, state.range(0)));
  }
}
BENCHMARK(BM_DeltaCoefficients)->Arg(4)->Arg(8)->Arg(16);

void BM_VerifyAlgebra(benchmark::State& state) {
  const Presentation alg(AlgebraName::n2_mirror_twisted);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_algebra(alg, state.range(0)));
  }
}
BENCHMARK(BM_VerifyAlgebra)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// Fresh engine per iteration, so memoization does not carry over.
void BM_VirasoroOnSpace(benchmark::State& state) {
  const Rational weight(state.range(0));
  for (auto _ : state) {
    FreeFieldVosa v(weight);
    for (const FockState& s : v.space().basis()) {
      benchmark::DoNotOptimize(v.virasoro(0, FockVector(s)));
    }
  }
}
BENCHMARK(BM_VirasoroOnSpace)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SigmaCharacter(benchmark::State& state) {
  for (auto _ : state) {
    FreeFieldVosa v(2);
    SigmaTwistedModule sigma(v);
    benchmark::DoNotOptimize(sigma_character(sigma, Rational(state.range(0))));
  }
}
BENCHMARK(BM_SigmaCharacter)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
