#include <benchmark/benchmark.h>

#include <random>

#include <majorana/majorana.hpp>

using namespace majorana;

namespace {

SymmetricState random_state(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Vector c(n + 1);
  for (int i = 0; i <= n; ++i) c(i) = Complex(g(rng), g(rng));
  return SymmetricState::from_coefficients(c);
}

std::vector<Spinor> random_spinors(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Spinor> out;
  for (int i = 0; i < n; ++i) out.push_back(Spinor::from_angles(2 * M_PI * u(rng), std::acos(1 - 2 * u(rng))));
  return out;
}

std::vector<int> range(int first, int last) {
  std::vector<int> out;
  for (int q = first; q <= last; ++q) out.push_back(q);
  return out;
}

void BM_MajoranaPoints(benchmark::State& state) {
  const auto s = random_state(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(majorana_points(s));
}
BENCHMARK(BM_MajoranaPoints)->DenseRange(2, 20, 6);

void BM_Symmetrize(benchmark::State& state) {
  const auto spinors = random_spinors(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize(spinors));
}
BENCHMARK(BM_Symmetrize)->DenseRange(2, 20, 6);

void BM_GeometricMeasure(benchmark::State& state) {
  const auto s = random_state(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(geometric_measure(s));
}
BENCHMARK(BM_GeometricMeasure)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_RdmSymmetric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = random_state(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rdm_symmetric(s, n / 2));
}
BENCHMARK(BM_RdmSymmetric)->Arg(4)->Arg(8)->Arg(16);

void BM_RdmFull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = expand_to_full(random_state(n, 5));
  const auto keep = range(1, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(rdm_full(f, keep));
}
BENCHMARK(BM_RdmFull)->Arg(4)->Arg(8)->Arg(12);

void BM_Reconstruct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = expand_to_full(dnk_state(n, 1, 0.6, Complex(0.0, 0.8)));
  const auto a = rdm_full(f, range(1, n - 1));
  const auto b = rdm_full(f, range(2, n));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_from_two_marginals(a, b));
}
BENCHMARK(BM_Reconstruct)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
