#include <benchmark/benchmark.h>

#include "nccr/bundle_spec.hpp"
#include "nccr/bwb.hpp"
#include "nccr/cohengine.hpp"
#include "nccr/kfunctor.hpp"
#include "nccr/linalg.hpp"
#include "nccr/mutation.hpp"
#include "nccr/quiveralg.hpp"

using namespace nccr;

static void BM_TraceMultRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto m = coh::trace_mult_matrix(n, 3, 1);
    benchmark::DoNotOptimize(linalg::rank(m.matrix));
  }
}
BENCHMARK(BM_TraceMultRank)->Arg(3)->Arg(4)->Arg(5);

static void BM_QuiverGradedDim(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  quiver::Quiver q(4);
  for (auto _ : state) benchmark::DoNotOptimize(quiver::graded_dim(q, 0, 1, len));
}
BENCHMARK(BM_QuiverGradedDim)->Arg(3)->Arg(5)->Arg(7);

static void BM_Cohomology(benchmark::State& state) {
  const auto e = parse_bundle_spec("3*hom(2,1,-1) + omega(2,-1) - wedgeT(1,4)", 5);
  for (auto _ : state) benchmark::DoNotOptimize(bwb::cohomology(e));
}
BENCHMARK(BM_Cohomology);

static void BM_HomYGraded(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coh::hom_y_graded(0, 2, 4, 6));
}
BENCHMARK(BM_HomYGraded);

static void BM_KnMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kf::kn_matrix(0, n, kf::Direction::KN));
}
BENCHMARK(BM_KnMatrix)->Arg(4)->Arg(8);

static void BM_MutationOrbit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mut::orbit_check(n, 4));
}
BENCHMARK(BM_MutationOrbit)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
