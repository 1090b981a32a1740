// SPDX-License-Identifier: Apache-2.0
#include "rhframes/kernels.hpp"

#include <string>

#include "rhframes/errors.hpp"

namespace rhf::kernels {

namespace {

// i-k-j ordering; each output row is owned by one thread, so the parallel
// and serial paths accumulate every entry in the same order.
void gemm_rows(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
               std::size_t inner, std::size_t cols, std::size_t row) {
  Complex* out = c.data() + row * cols;
  const Complex* arow = a.data() + row * inner;
  for (std::size_t k = 0; k < inner; ++k) {
    const Complex s = arow[k];
    if (s == Complex(0.0, 0.0)) continue;
    const Complex* brow = b.data() + k * cols;
    for (std::size_t j = 0; j < cols; ++j) out[j] += s * brow[j];
  }
}

}  // namespace

Mat matmul(const Mat& a, const Mat& b, Exec exec) {
  if (a.cols() != b.rows())
    throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const std::size_t rows = a.rows(), inner = a.cols(), cols = b.cols();
  std::vector<Complex> c(rows * cols, Complex(0.0, 0.0));
  const bool parallel = exec == Exec::Parallel && rows * inner * cols >= kParallelThreshold;
  if (parallel) {
    const auto n = static_cast<long long>(rows);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i)
      gemm_rows(a.entries(), b.entries(), c, inner, cols, static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < rows; ++i) gemm_rows(a.entries(), b.entries(), c, inner, cols, i);
  }
  return Mat(join(a.field(), b.field()), rows, cols, std::move(c));
}

Mat frame_operator(std::span<const Mat> isometries, Exec exec) {
  if (isometries.empty()) return {};
  const std::size_t d = isometries.front().rows();
  const std::size_t r = isometries.front().cols();
  Field field = Field::Real;
  for (const Mat& phi : isometries) {
    if (phi.rows() != d || phi.cols() != r) throw ShapeError("frame_operator: mixed shapes");
    field = join(field, phi.field());
  }
  std::vector<Complex> out(d * d, Complex(0.0, 0.0));
  // entry (p, q) = Σ_i Σ_k Φ_i(p, k) conj(Φ_i(q, k)), summed in (i, k) order
  auto row = [&](std::size_t p) {
    for (std::size_t q = 0; q < d; ++q) {
      Complex acc = 0.0;
      for (const Mat& phi : isometries)
        for (std::size_t k = 0; k < r; ++k) acc += phi(p, k) * std::conj(phi(q, k));
      out[p * d + q] = acc;
    }
  };
  const std::size_t work = d * d * r * isometries.size();
  if (exec == Exec::Parallel && work >= kParallelThreshold) {
    const auto n = static_cast<long long>(d);
#pragma omp parallel for schedule(static)
    for (long long p = 0; p < n; ++p) row(static_cast<std::size_t>(p));
  } else {
    for (std::size_t p = 0; p < d; ++p) row(p);
  }
  Mat s(field, d, d, std::move(out));
  return s;
}

}  // namespace rhf::kernels
