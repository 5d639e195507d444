#include "kappa/catalog.hpp"
#include "kappa/localization.hpp"
#include "kappa/obstruction.hpp"
#include "kappa/su2rep.hpp"
#include "kappa/symalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace kappa;

static WeightVector make_weights(std::size_t n, std::int64_t bound) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::vector<std::int64_t> a(n);
  for (auto& x : a) x = d(rng);
  return WeightVector(a);
}

static void BM_ElementarySymmetricSquares(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sq = make_weights(n, 100).squares();
  for (auto _ : state) benchmark::DoNotOptimize(elementary_symmetric(n / 2, sq));
}
BENCHMARK(BM_ElementarySymmetricSquares)->RangeMultiplier(2)->Range(8, 256);

static void BM_SignedDoublingSigma(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto w = make_weights(n, 100);
  for (auto _ : state) benchmark::DoNotOptimize(signed_doubling_sigma(n / 2, w));
}
BENCHMARK(BM_SignedDoublingSigma)->RangeMultiplier(2)->Range(8, 256);

static void BM_SigmaEvalMixedMonomial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::vector<unsigned> p(n, 1);
  const CharClassMonomial c(n, p, 1);
  const auto w = make_weights(n, 50);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_eval(c, w));
}
BENCHMARK(BM_SigmaEvalMixedMonomial)->RangeMultiplier(2)->Range(4, 64);

static void BM_LocalizeManyComponents(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  FixedPointData d;
  d.fiber_half_dim = 6;
  for (std::size_t i = 0; i < r; ++i) d.components.push_back({"m" + std::to_string(i), 1, make_weights(6, 20)});
  const auto c = parse_monomial("e*p1*p2", 6);
  for (auto _ : state) benchmark::DoNotOptimize(localize_circle(d, c));
}
BENCHMARK(BM_LocalizeManyComponents)->RangeMultiplier(4)->Range(4, 1024);

static void BM_TheoremACheck(benchmark::State& state) {
  const auto b = adams_transform(state.range(0), weights_to_b(make_weights(8, 12)));
  const auto flags = HypothesisFlags::all_set();
  for (auto _ : state) benchmark::DoNotOptimize(theorem_a_check(b, flags));
}
BENCHMARK(BM_TheoremACheck)->Arg(3)->Arg(101)->Arg(10007);

static void BM_RealizeWeights(benchmark::State& state) {
  RealRep r;
  for (unsigned d = 3; d <= static_cast<unsigned>(state.range(0)); d += 4) r.add(RealIrrep(d));
  r.add(RealIrrep(1), 64);
  const auto w = restrict_to_torus(r);
  for (auto _ : state) benchmark::DoNotOptimize(realize_weights(w));
}
BENCHMARK(BM_RealizeWeights)->Arg(31)->Arg(127);

static void BM_S2xS2Family(benchmark::State& state) {
  std::int64_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s2xs2_family(k));
    k = (k + 2) % 1000;
  }
}
BENCHMARK(BM_S2xS2Family);

BENCHMARK_MAIN();
