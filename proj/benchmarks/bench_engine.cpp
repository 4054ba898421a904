#include <benchmark/benchmark.h>

#include <vector>

#include "pke/algebra.hpp"
#include "pke/catalog.hpp"
#include "pke/geometry.hpp"
#include "pke/ma_engine.hpp"

namespace {

using pke::MultiPoly;
using pke::Rational;

MultiPoly plane_cube() {
  MultiPoly p = MultiPoly::constant(2, Rational(1));
  p += MultiPoly::variable(2, 0) * Rational(1, 3);
  p += MultiPoly::variable(2, 1) * Rational(1, 3);
  return p.pow(3);
}

void BM_BareissDeterminant(benchmark::State& state) {
  const pke::PolyMatrix m = pke::log_ma_matrix(pke::product_solution(std::vector<unsigned>{1, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(pke::determinant(m));
}
BENCHMARK(BM_BareissDeterminant)->Unit(benchmark::kMillisecond);

void BM_MinorsDeterminant(benchmark::State& state) {
  const pke::PolyMatrix m = pke::log_ma_matrix(pke::product_solution(std::vector<unsigned>{1, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(pke::determinant_by_minors(m));
}
BENCHMARK(BM_MinorsDeterminant)->Unit(benchmark::kMillisecond);

void BM_VerifyProductSolution(benchmark::State& state) {
  std::vector<unsigned> parts(static_cast<std::size_t>(state.range(0)), 1u);
  const MultiPoly p = pke::product_solution(parts);
  for (auto _ : state) benchmark::DoNotOptimize(pke::verify_ma_star(p));
}
BENCHMARK(BM_VerifyProductSolution)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_VerifyPlaneCube(benchmark::State& state) {
  const MultiPoly p = plane_cube();
  for (auto _ : state) benchmark::DoNotOptimize(pke::verify_ma_star(p));
}
BENCHMARK(BM_VerifyPlaneCube)->Unit(benchmark::kMicrosecond);

void BM_TaylorContinuation(benchmark::State& state) {
  const auto cd = pke::CauchyData::family(1, 1, Rational(3), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pke::taylor_continue_n2(cd, 8));
}
BENCHMARK(BM_TaylorContinuation)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_FeasibleKScan(benchmark::State& state) {
  const std::vector<Rational> grid{Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(3), Rational(-3)};
  for (auto _ : state) benchmark::DoNotOptimize(pke::feasible_k_scan_n2(6, grid));
}
BENCHMARK(BM_FeasibleKScan)->Unit(benchmark::kMillisecond);

void BM_EinsteinFit(benchmark::State& state) {
  const auto phi = pke::ToricPotential::logarithmic(plane_cube(), Rational(1));
  const auto points = pke::sample_points(2, 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pke::einstein_fit(phi, points));
}
BENCHMARK(BM_EinsteinFit)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
