#include <benchmark/benchmark.h>

#include <random>

#include "tbsym/linalg.hpp"
#include "tbsym/mulmap.hpp"
#include "tbsym/oracle.hpp"
#include "tbsym/structured.hpp"
#include "tbsym/toeplitz.hpp"

using namespace tbsym;

namespace {

MultiPoly dense_poly(const VarTablePtr& t, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  MultiPoly p(t);
  for (const auto& m : monomials_up_to(t->size(), degree)) {
    p += MultiPoly::monomial(t, m, Rational(coeff(rng)));
  }
  return p;
}

void BM_PolyMul(benchmark::State& state) {
  const auto t = VarTable::make({"x", "y", "z", "w"});
  std::mt19937 rng(7);
  const MultiPoly p = dense_poly(t, static_cast<int>(state.range(0)), rng);
  const MultiPoly q = dense_poly(t, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
  state.counters["terms"] = static_cast<double>(p.size());
}
BENCHMARK(BM_PolyMul)->DenseRange(2, 5);

void BM_SylvesterDet(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MulMapContext ctx = build_context(n, n - 1);
  const PolyMatrix jac = sylvester_jacobian(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(det_poly(jac));
}
BENCHMARK(BM_SylvesterDet)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SeriesInverse(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MulMapContext ctx = build_context(n, n);
  const LowerToeplitzSeries b = ctx.b_series(2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(series_inv(b));
}
BENCHMARK(BM_SeriesInverse)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::size_t r = static_cast<std::size_t>(state.range(1));
  JetConfig cfg;
  cfg.record_generators = false;
  for (auto _ : state) benchmark::DoNotOptimize(tb_symbol_oracle(n, r, cfg));
}
BENCHMARK(BM_Oracle)->Args({3, 2})->Args({5, 3})->Args({6, 4})->Args({8, 5})->Unit(benchmark::kMillisecond);

void BM_Structured(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::size_t r = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tb_symbol_structured(n, r));
}
BENCHMARK(BM_Structured)->Args({5, 3})->Args({11, 5})->Args({13, 8})->Args({15, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
