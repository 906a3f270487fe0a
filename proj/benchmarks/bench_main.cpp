#include <benchmark/benchmark.h>

#include <mlc/diagrams.hpp>
#include <mlc/qpoly.hpp>
#include <mlc/search.hpp>
#include <mlc/spreads.hpp>
#include <mlc/weights.hpp>

using namespace mlc;

namespace {

void BM_PolyCompareAllQ(benchmark::State& state) {
  // two long incomparable polynomials with a crossover
  QPolynomial f, g;
  for (int e = 0; e <= 28; ++e) {
    f += QPolynomial::monomial(e) * mpz_class((e * 7) % 5 + 1);
    g += QPolynomial::monomial(e) * mpz_class((e * 3) % 5 + 1);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_strictly_better(f, g));
    benchmark::DoNotOptimize(is_strictly_better(g, f));
  }
}
BENCHMARK(BM_PolyCompareAllQ);

void BM_PolyEval(benchmark::State& state) {
  QPolynomial f;
  for (int e = 0; e <= 90; e += 3) f += QPolynomial::monomial(e);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.eval(state.range(0)));
  }
}
BENCHMARK(BM_PolyEval)->Arg(2)->Arg(9);

void BM_DiagramExponent(benchmark::State& state) {
  FerrersDiagram f = FerrersDiagram::from_rows({9, 8, 7, 7, 4, 3, 2, 2, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ef_upper_exponent(f, 5));
  }
}
BENCHMARK(BM_DiagramExponent);

void BM_UpperWeight(benchmark::State& state) {
  PivotVector v = decode(15872, 14);
  for (auto _ : state) {
    benchmark::DoNotOptimize(upper_weight(v, 4));
  }
}
BENCHMARK(BM_UpperWeight);

void BM_Histogram14_8_5(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(weight_histogram(14, 8, 5, Regime::upper));
  }
}
BENCHMARK(BM_Histogram14_8_5);

void BM_Solve14_8_5(benchmark::State& state) {
  for (auto _ : state) {
    Instance inst = Instance::build(14, 8, 5, Regime::upper, 4, 4);
    benchmark::DoNotOptimize(solve(inst));
  }
}
BENCHMARK(BM_Solve14_8_5)->Unit(benchmark::kMillisecond);

void BM_Solve15_10_6(benchmark::State& state) {
  for (auto _ : state) {
    Instance inst = Instance::build(15, 10, 6, Regime::upper, 3, 3);
    benchmark::DoNotOptimize(solve(inst));
  }
}
BENCHMARK(BM_Solve15_10_6)->Unit(benchmark::kMillisecond);

void BM_Solve16_10_8(benchmark::State& state) {
  for (auto _ : state) {
    Instance inst = Instance::build(16, 10, 8, Regime::upper, 16, 16);
    benchmark::DoNotOptimize(solve(inst));
  }
}
BENCHMARK(BM_Solve16_10_8)->Unit(benchmark::kMillisecond);

void BM_SpreadPolynomial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(spread_polynomial({19, 4}));
  }
}
BENCHMARK(BM_SpreadPolynomial);

}  // namespace

BENCHMARK_MAIN();
