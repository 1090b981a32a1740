// SPDX-License-Identifier: Apache-2.0
// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "rhframes/eitff.hpp"
#include "rhframes/kernels.hpp"
#include "rhframes/radon_hurwitz.hpp"

using namespace rhf;
using kernels::Exec;

namespace {

Mat random_complex(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Mat m(Field::Complex, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, Complex(g(rng), g(rng)));
  return m;
}

void BM_Matmul(benchmark::State& state, Exec exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Mat a = random_complex(n, 1), b = random_complex(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul(a, b, exec));
  state.SetComplexityN(state.range(0));
}

void BM_FrameOperator(benchmark::State& state, Exec exec) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const FusionFrame f = build_eitff(Field::Complex, r, rho_number(Field::Complex, r) + 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::frame_operator(f.isometries(), exec));
}

void BM_Verify(benchmark::State& state, Exec exec) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const FusionFrame f = build_eitff(Field::Complex, r, rho_number(Field::Complex, r) + 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_eitff(f, kDefaultTol, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Matmul, serial, Exec::Serial)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK_CAPTURE(BM_Matmul, parallel, Exec::Parallel)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK_CAPTURE(BM_FrameOperator, serial, Exec::Serial)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_CAPTURE(BM_FrameOperator, parallel, Exec::Parallel)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_CAPTURE(BM_Verify, serial, Exec::Serial)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_CAPTURE(BM_Verify, parallel, Exec::Parallel)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
