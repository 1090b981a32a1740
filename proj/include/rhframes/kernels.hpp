// SPDX-License-Identifier: Apache-2.0
//
// Data-parallel inner loops. Every kernel has an OpenMP path and a serial
// reference path selected by `Exec`; both produce bit-identical results
// (reductions are max-only, sums are evaluated in a fixed order per entry).
#pragma once

#include <algorithm>
#include <cstddef>
#include <span>

#include "rhframes/linalg.hpp"

namespace rhf::kernels {

enum class Exec { Serial, Parallel };

// Work (in multiply-adds) below which the parallel path stays serial.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

Mat matmul(const Mat& a, const Mat& b, Exec exec);

// Σ_i Φ_i Φ_i* for same-shape isometries.
Mat frame_operator(std::span<const Mat> isometries, Exec exec);

// max over unordered pairs i < j < n of f(i, j); 0 when n < 2.
template <class F>
double max_over_pairs(std::size_t n, F&& f, Exec exec) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  double best = 0.0;
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, f(i, j));
    return best;
  }
  const auto count = static_cast<long long>(pairs);
#pragma omp parallel for reduction(max : best) schedule(dynamic)
  for (long long p = 0; p < count; ++p) {
    // unrank p into (i, j) with i < j, row-major over the upper triangle
    std::size_t i = 0;
    auto rem = static_cast<std::size_t>(p);
    while (rem >= n - 1 - i) {
      rem -= n - 1 - i;
      ++i;
    }
    best = std::max(best, f(i, i + 1 + rem));
  }
  return best;
}

}  // namespace rhf::kernels
