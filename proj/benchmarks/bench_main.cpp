#include <benchmark/benchmark.h>

#include "fglie/bch.hpp"
#include "fglie/fgl.hpp"
#include "fglie/freelie.hpp"
#include "fglie/liealg.hpp"
#include "fglie/sampling.hpp"

using namespace fglie;

namespace {

// bch_series caches per degree, so this rebuilds the series from scratch.
void BM_BchSeries(benchmark::State &state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    AssocSeries x = AssocSeries::generator(2, N, 0), y = AssocSeries::generator(2, N, 1);
    AssocSeries u = exp_series(x) * exp_series(y) - AssocSeries::one(2, N);
    benchmark::DoNotOptimize(project_to_lie(log_one_plus(u)));
  }
}
BENCHMARK(BM_BchSeries)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_BchEvalPadic(benchmark::State &state) {
  const Ring ring = Ring::padic(3, 16);
  RingLieAlgebra L = RingLieAlgebra::from_rational(algebras::by_name("sl2"), ring);
  Rng rng(1);
  Point a = random_bold_p_point(ring, 3, 3, rng), b = random_bold_p_point(ring, 3, 3, rng);
  const int N = static_cast<int>(state.range(0));
  bch_series(N);
  for (auto _ : state)
    benchmark::DoNotOptimize(bch_eval(L, a, b, N));
}
BENCHMARK(BM_BchEvalPadic)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_InvariantDerivation(benchmark::State &state) {
  const int k = static_cast<int>(state.range(0));
  FormalGroupLaw F = laws::unitriangular(4, Ring::rational(), k + 1);
  Point a = zero_point(F.ring(), F.dimension());
  a[0] = Coeff::one(F.ring());
  for (auto _ : state)
    benchmark::DoNotOptimize(invariant_derivation(F, a, k));
}
BENCHMARK(BM_InvariantDerivation)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_GroupLog(benchmark::State &state) {
  const int D = static_cast<int>(state.range(0));
  FormalGroupLaw F = laws::heisenberg(Ring::rational(), D);
  Rng rng(2);
  Point x = random_bold_p_point(F.ring(), 3, 3, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(group_log(F, x));
}
BENCHMARK(BM_GroupLog)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_GroupLogMultiplicativePadic(benchmark::State &state) {
  const int D = static_cast<int>(state.range(0));
  FormalGroupLaw F = laws::multiplicative(Ring::padic(3, 8), D);
  Rng rng(3);
  Point x = random_bold_p_point(F.ring(), 3, 1, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(group_log(F, x));
}
BENCHMARK(BM_GroupLogMultiplicativePadic)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
