#include "powertower/combinatorics.hpp"
#include "powertower/derivative.hpp"
#include "powertower/laurent.hpp"
#include "powertower/oracle.hpp"
#include "powertower/series.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace powertower;

// Table construction from scratch (the shared snapshot cache is not
// involved; this measures the raw recurrence fill).
void BM_omega_table(benchmark::State& state) {
  const int max_a = static_cast<int>(state.range(0));
  for (auto _ : state) {
    OmegaTable table(max_a);
    benchmark::DoNotOptimize(table.at(max_a, max_a - 1));
  }
}
BENCHMARK(BM_omega_table)->Arg(50)->Arg(100)->Arg(200);

void BM_rencontres_table(benchmark::State& state) {
  const int max_n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RencontresTable table(max_n);
    benchmark::DoNotOptimize(table.at(max_n, 0));
  }
}
BENCHMARK(BM_rencontres_table)->Arg(15)->Arg(30)->Arg(60);

// Exact power-series oracle, rebuilt every iteration: series division,
// multiplication, and the exponential recurrence in rational arithmetic.
void BM_series_oracle(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    oracle::FormalSeries s = oracle::series_at_one(order);
    benchmark::DoNotOptimize(s.coeffs.back());
  }
}
BENCHMARK(BM_series_oracle)->Arg(10)->Arg(20)->Arg(30);

void BM_brute_force_rencontres(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BigInt count = oracle::brute_force_rencontres(n, 1);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_brute_force_rencontres)->Arg(7)->Arg(8)->Arg(9);

// Numeric evaluation of a symbolic derivative form: per-term rational
// conversion plus the compensated ln-polynomial accumulation. The form
// itself is memoised, so iterations measure evaluation alone.
void BM_derivative_eval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  derivative_eval(n, 1.5, DerivativeMethod::closed);  // warm the form cache
  for (auto _ : state) {
    DerivativeValue v = derivative_eval(n, 1.5, DerivativeMethod::closed);
    benchmark::DoNotOptimize(v.value);
  }
}
BENCHMARK(BM_derivative_eval)->Arg(5)->Arg(10)->Arg(20);

void BM_finite_difference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    oracle::FiniteDiffResult r = oracle::finite_difference(n, 1.5);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_finite_difference)->Arg(2)->Arg(4)->Arg(6);

void BM_series_partial_sum(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const TaylorSeries series = taylor_at_one(order);
  for (auto _ : state) {
    double v = evaluate_partial(series, 0.9, order);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_series_partial_sum)->Arg(10)->Arg(20)->Arg(30);

// Uncached Laurent arithmetic: differentiate a dense polynomial and
// evaluate it exactly at a non-trivial rational point.
void BM_laurent_eval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LaurentPoly p = poly_p(n);
  const BigRat x(3, 2);
  for (auto _ : state) {
    BigRat v = p.eval(x);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_laurent_eval)->Arg(20)->Arg(40)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
