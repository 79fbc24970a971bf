#include <benchmark/benchmark.h>

#include "douady/adhm.hpp"
#include "douady/goettsche.hpp"
#include "douady/heisenberg.hpp"
#include "douady/partitions.hpp"
#include "douady/surface.hpp"

using namespace douady;

static void BM_ProductExpand(benchmark::State& state) {
  const auto k3 = presets::k3();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poincare_hilbert_product(k3, order));
}
BENCHMARK(BM_ProductExpand)->Arg(8)->Arg(16)->Arg(24);

static void BM_GradedCharacter(benchmark::State& state) {
  const auto s = presets::abelian();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graded_character(s, order));
}
BENCHMARK(BM_GradedCharacter)->Arg(4)->Arg(6);

static void BM_StratumGeq(benchmark::State& state) {
  const auto all = enumerate(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int hits = 0;
    for (const auto& a : all) {
      for (const auto& b : all) hits += stratum_geq(a, b);
    }
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_StratumGeq)->Arg(8)->Arg(12);

// monomial ideal conjugated to a generic frame, so the support is not read off a diagonal
static void BM_BarletSupport(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto tr = from_monomial_ideal(enumerate(n).front());
  GaussianMatrix g = GaussianMatrix::identity(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r + 1 < g.rows(); ++r) g(r, r + 1) = GaussianRational(1, 1);
  const auto moved = conjugate(tr, g);
  for (auto _ : state) benchmark::DoNotOptimize(barlet_support(moved));
}
BENCHMARK(BM_BarletSupport)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
