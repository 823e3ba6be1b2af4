#include <benchmark/benchmark.h>

#include "freudlab/freud.hpp"
#include "freudlab/sobolev.hpp"
#include "freudlab/zeros.hpp"

using namespace freudlab;

namespace {

constexpr Precision P{256};

const FreudTable& table() {
  static const FreudTable t = string_newton(2000, P, Real::pow2(-224, P) * 2000);
  return t;
}

}  // namespace

static void BM_StringNewton(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Real tol = Real::pow2(-224, P) * n;
  for (auto _ : state) benchmark::DoNotOptimize(string_newton(n, P, tol));
}
BENCHMARK(BM_StringNewton)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_StringForwardEscalating(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(string_forward_escalating(n, P));
}
BENCHMARK(BM_StringForwardEscalating)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_GramSchmidt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SobolevParams sp({Real(1, P), Real(1, P)});
  const Real tol = Real::pow2(-128, P);
  for (auto _ : state) benchmark::DoNotOptimize(gram_schmidt_Q(n, sp, P, tol));
}
BENCHMARK(BM_GramSchmidt)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_KhatRecurrence(benchmark::State& state) {
  const FreudTable& t = table();
  for (auto _ : state) benchmark::DoNotOptimize(khat_recurrence_lambda2zero(1000, Real(1, P), t));
}
BENCHMARK(BM_KhatRecurrence)->Unit(benchmark::kMillisecond);

static void BM_GaussFreud(benchmark::State& state) {
  const FreudTable& t = table();
  const int n = static_cast<int>(state.range(0));
  const Real tol = Real::pow2(-200, P);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_freud(t, n, tol));
}
BENCHMARK(BM_GaussFreud)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_ZerosP(benchmark::State& state) {
  const FreudTable& t = table();
  const Real tol = Real::from_string("1e-40", P);
  for (auto _ : state) benchmark::DoNotOptimize(zeros_P(t, 60, tol));
}
BENCHMARK(BM_ZerosP)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
