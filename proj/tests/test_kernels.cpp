// SPDX-License-Identifier: Apache-2.0
// Parallel kernels against their serial references.
#include <doctest.h>

#include <random>

#include "rhframes/eitff.hpp"
#include "rhframes/kernels.hpp"
#include "support.hpp"

using namespace rhf;
using kernels::Exec;

TEST_CASE("matmul parallel matches serial bit for bit") {
  std::mt19937_64 rng(21);
  for (auto [m, k, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{3, 4, 5},
                         {64, 64, 64},
                         {97, 41, 130}}) {
    const Mat a = testing::random_gaussian(m, k, Field::Complex, rng);
    const Mat b = testing::random_gaussian(k, n, Field::Real, rng);
    const Mat serial = kernels::matmul(a, b, Exec::Serial);
    CHECK(kernels::matmul(a, b, Exec::Parallel) == serial);
    CHECK(matmul(a, b) == serial);
  }
}

TEST_CASE("frame_operator parallel matches serial") {
  const FusionFrame frame = build_eitff(Field::Complex, 16, 12);
  const Mat serial = kernels::frame_operator(frame.isometries(), Exec::Serial);
  CHECK(kernels::frame_operator(frame.isometries(), Exec::Parallel) == serial);
  const double c = 12.0 * 16.0 / 32.0;
  CHECK(max_abs_diff(serial, c * Mat::identity(32)) <= 1e-12);
}

TEST_CASE("max_over_pairs visits every unordered pair once") {
  for (std::size_t n : {0, 1, 2, 5, 17}) {
    auto f = [&](std::size_t i, std::size_t j) { return static_cast<double>(i * 100 + j); };
    const double serial = kernels::max_over_pairs(n, f, Exec::Serial);
    CHECK(kernels::max_over_pairs(n, f, Exec::Parallel) == serial);
    if (n >= 2) CHECK(serial == static_cast<double>((n - 2) * 100 + n - 1));
  }
  std::vector<int> hits(17 * 17, 0);
  kernels::max_over_pairs(
      17,
      [&](std::size_t i, std::size_t j) {
#pragma omp atomic
        ++hits[i * 17 + j];
        return 0.0;
      },
      Exec::Parallel);
  for (std::size_t i = 0; i < 17; ++i)
    for (std::size_t j = 0; j < 17; ++j) CHECK(hits[i * 17 + j] == (i < j ? 1 : 0));
}

TEST_CASE("verification and coherence agree across execution modes") {
  const FusionFrame frame = build_eitff(Field::Real, 16, 11);
  const auto s = verify_eitff(frame, kDefaultTol, Exec::Serial);
  const auto p = verify_eitff(frame, kDefaultTol, Exec::Parallel);
  CHECK(s.tightness_residual == p.tightness_residual);
  CHECK(s.equiisoclinic_residual == p.equiisoclinic_residual);
  CHECK(block_coherence(frame, Exec::Serial) == block_coherence(frame, Exec::Parallel));
}
