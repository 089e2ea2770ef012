#include <benchmark/benchmark.h>

#include "awconn/aw_polys.hpp"
#include "awconn/connection.hpp"
#include "awconn/qpochhammer.hpp"

namespace {

awconn::ParamSet bench_params() {
  using awconn::Rat;
  return {Rat(2), Rat(3), Rat(5), Rat(7), Rat(1, 2)};
}

void BM_qpoch(benchmark::State& state) {
  const awconn::Rat x(3, 7), q(1, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(awconn::qpoch(x, q, state.range(0)));
}
BENCHMARK(BM_qpoch)->Arg(8)->Arg(32)->Arg(128);

void BM_nonsymmetric_E(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  // Fresh tuples defeat the memo cache so the recursion cost is measured.
  long salt = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const awconn::ParamSet p{awconn::Rat(2), awconn::Rat(3), awconn::Rat(5),
                             awconn::Rat(101 + 2 * salt++),
                             awconn::Rat(1, 2)};
    state.ResumeTiming();
    benchmark::DoNotOptimize(awconn::nonsymmetric_E(awconn::zz(r), p));
  }
}
BENCHMARK(BM_nonsymmetric_E)->Arg(-4)->Arg(8)->Arg(-12);

void BM_transition_closed(benchmark::State& state) {
  const awconn::ShiftSpec spec{awconn::ShiftKind::a, bench_params(),
                               awconn::Rat(11, 3)};
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(awconn::transition_matrix_closed(spec, N));
}
BENCHMARK(BM_transition_closed)->Arg(4)->Arg(6)->Arg(8);

void BM_transition_oracle(benchmark::State& state) {
  const awconn::ShiftSpec spec{awconn::ShiftKind::a, bench_params(),
                               awconn::Rat(11, 3)};
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(awconn::transition_matrix_oracle(spec, N));
}
BENCHMARK(BM_transition_oracle)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
