#include <benchmark/benchmark.h>

#include "clusterdyn/dynamics.hpp"
#include "clusterdyn/quad.hpp"
#include "clusterdyn/quiver.hpp"
#include "clusterdyn/random.hpp"

using namespace clusterdyn;

static void BM_PhiExactR1Period(benchmark::State& state) {
  Rng rng(1);
  const Point4<Rational> x = random_point4(rng);
  for (auto _ : state) benchmark::DoNotOptimize(phi_power(1, x, 12));
}
BENCHMARK(BM_PhiExactR1Period);

static void BM_PhiExactSteps(benchmark::State& state) {
  Rng rng(2);
  const Point4<Rational> x = random_point4(rng);
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_power(3, x, steps));
}
BENCHMARK(BM_PhiExactSteps)->Arg(2)->Arg(4)->Arg(6);

template <class T>
static void BM_PhiFloat(benchmark::State& state) {
  Point4<T> x{T(0.9), T(1.1), T(0.7), T(1.3)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(x);
    benchmark::DoNotOptimize(phi_power(3, x, 10));
  }
}
BENCHMARK(BM_PhiFloat<double>);
BENCHMARK(BM_PhiFloat<long double>);
BENCHMARK(BM_PhiFloat<Quad>);

static void BM_PhiLog(benchmark::State& state) {
  const LogPoint4 p = to_log_point(Point4<Rational>{2, 3, 5, 7}, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_log(3, p));
}
BENCHMARK(BM_PhiLog)->Arg(256)->Arg(2048);

static void BM_Classify(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  Rng rng(3);
  std::vector<Point4<Rational>> pts;
  for (int i = 0; i < 64; ++i) pts.push_back(random_point4(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(r, pts[i++ % pts.size()]));
}
BENCHMARK(BM_Classify)->Arg(1)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
  Rng rng(4);
  const Point4<Rational> x = random_point4(rng);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_classify(3, x));
}
BENCHMARK(BM_BruteForce);

static void BM_NormalForm(benchmark::State& state) {
  Rng rng(5);
  std::vector<GammaElement> fs;
  for (int i = 0; i < 64; ++i) fs.push_back(random_gamma(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(fs[i++ % fs.size()]));
}
BENCHMARK(BM_NormalForm);

static void BM_PosRealCmpOne(benchmark::State& state) {
  const PosReal x = PosReal(2).pow(Rational(1, 2)) / PosReal(3).pow(Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(x.cmp_one());
}
BENCHMARK(BM_PosRealCmpOne);

static void BM_PosRealMul(benchmark::State& state) {
  const PosReal a = PosReal(12).pow(Rational(2, 3)), b = PosReal(18).pow(Rational(1, 5));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PosRealMul);

static void BM_DeriveBMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derive_b_matrix(3));
}
BENCHMARK(BM_DeriveBMatrix)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
