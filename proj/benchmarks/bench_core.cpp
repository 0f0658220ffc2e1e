#include <benchmark/benchmark.h>

#include <random>

#include "qes/gauged_operator.hpp"
#include "qes/operator_matrix.hpp"
#include "qes/spectral.hpp"
#include "qes/symmetric.hpp"

namespace {

qes::ModelParams params(std::size_t n, long m) {
  qes::ModelParams p;
  p.n = n;
  p.m = qes::Rational(m);
  p.a = qes::Rational(3, 2);
  p.b = qes::Rational(1, 3);
  p.roots = {qes::Rational(2), qes::Rational(-1, 2), qes::Rational(-3, 2)};
  return p;
}

void BM_BuildGaugedOperator(benchmark::State& state) {
  const auto p = params(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(qes::build_gauged_operator(p, qes::GaugeMask()));
}
BENCHMARK(BM_BuildGaugedOperator)->DenseRange(1, 3);

void BM_BuildMatrix(benchmark::State& state) {
  const auto op = qes::build_gauged_operator(params(static_cast<std::size_t>(state.range(0)), state.range(1)), qes::GaugeMask());
  for (auto _ : state) benchmark::DoNotOptimize(qes::build_matrix(op));
}
BENCHMARK(BM_BuildMatrix)->Args({2, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_ZToTau(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto e2 = qes::elementary_symmetric(n, 2);
  const auto e1 = qes::elementary_symmetric(n, 1);
  const auto f = qes::poly_add(qes::poly_pow(e1, 3), qes::poly_mul(e1, e2));
  for (auto _ : state) benchmark::DoNotOptimize(qes::z_to_tau(f));
}
BENCHMARK(BM_ZToTau)->DenseRange(2, 4);

void BM_Eigenvalues(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  qes::DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(qes::eigenvalues(m));
}
BENCHMARK(BM_Eigenvalues)->Arg(6)->Arg(20)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
