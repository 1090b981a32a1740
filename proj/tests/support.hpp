// SPDX-License-Identifier: Apache-2.0
// Shared fixtures for the unit and acceptance tests.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "rhframes/eitff.hpp"
#include "rhframes/linalg.hpp"

namespace rhf::testing {

// Isometries of the real EITFF(4,2,4) written out from their closed-form entries.
inline std::vector<Mat> real424_isometries() {
  const double a = 1.0 / std::sqrt(3.0);
  const double b = std::sqrt(2.0) / std::sqrt(3.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  const double s2 = 1.0 / std::sqrt(2.0);
  return {
      Mat::real(4, 2, {a, 0, 0, a, b, 0, 0, b}),
      Mat::real(4, 2, {a, 0, 0, a, -s6, -s2, s2, -s6}),
      Mat::real(4, 2, {a, 0, 0, a, -s6, s2, -s2, -s6}),
      Mat::real(4, 2, {1, 0, 0, 1, 0, 0, 0, 0}),
  };
}

inline FusionFrame real424_frame() { return FusionFrame(Field::Real, 4, 2, real424_isometries()); }

inline Mat random_gaussian(std::size_t rows, std::size_t cols, Field f, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, f == Field::Real ? Complex(g(rng)) : Complex(g(rng), g(rng)));
  return m;
}

inline Mat random_unitary(std::size_t n, Field f, std::mt19937_64& rng) {
  return polar_unitary(random_gaussian(n, n, f, rng));
}

inline FusionFrame rotate(const FusionFrame& frame, const Mat& q) {
  std::vector<Mat> out;
  for (const Mat& p : frame.isometries()) out.push_back(matmul(q, p));
  return FusionFrame(join(frame.field(), q.field()), frame.d(), frame.r(), std::move(out));
}

}  // namespace rhf::testing
