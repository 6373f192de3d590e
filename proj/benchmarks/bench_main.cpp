#include <benchmark/benchmark.h>

#include <random>

#include "drk/boundary.hpp"
#include "drk/curvature.hpp"
#include "drk/finsect.hpp"
#include "drk/pythagorean.hpp"
#include "drk/ratfun.hpp"

namespace {

using namespace drk;

Poly random_poly(int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = {g(rng), g(rng)};
  return Poly(std::move(c));
}

const RationalSymbol& b1() {
  static const RationalSymbol b = RationalSymbol::make(Poly{0.5, 0.5}, Poly{1.0});
  return b;
}

const RationalSymbol& b2() {
  static const RationalSymbol b = RationalSymbol::make(Poly{0.5, -0.5}, Poly{1.0});
  return b;
}

void BM_PolyRoots(benchmark::State& state) {
  const Poly p = random_poly(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(poly_roots(p));
}
BENCHMARK(BM_PolyRoots)->Arg(4)->Arg(16)->Arg(64);

void BM_FejerRiesz(benchmark::State& state) {
  Poly s = random_poly(static_cast<int>(state.range(0)), 12);
  const auto t = TrigPolynomial::abs_squared(s);
  for (auto _ : state) benchmark::DoNotOptimize(fejer_riesz(t));
}
BENCHMARK(BM_FejerRiesz)->Arg(2)->Arg(8)->Arg(24);

void BM_Mate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mate(b1()));
}
BENCHMARK(BM_Mate);

void BM_DecideEquivX(benchmark::State& state) {
  const auto p1 = mate(b1());
  const auto p2 = mate(b2());
  for (auto _ : state) benchmark::DoNotOptimize(decide_equiv_X(p1, p2));
}
BENCHMARK(BM_DecideEquivX)->Unit(benchmark::kMillisecond);

void BM_DecideEquivS(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(decide_equiv_S(b1(), b2()));
}
BENCHMARK(BM_DecideEquivS)->Unit(benchmark::kMillisecond);

void BM_DefectModel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(DefectModel::build(b1(), n));
}
BENCHMARK(BM_DefectModel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ResidualTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(residual_table(b1(), {32, 64, 128}, DiskPoint(0.3)));
}
BENCHMARK(BM_ResidualTable)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
