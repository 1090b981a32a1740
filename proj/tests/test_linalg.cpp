// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "rhframes/errors.hpp"
#include "rhframes/linalg.hpp"
#include "rhframes/radon_hurwitz.hpp"
#include "support.hpp"

using namespace rhf;
using gen::I;
using gen::M;
using gen::R;
using gen::T;

TEST_CASE("real matrices reject imaginary parts and non-finite entries") {
  CHECK_THROWS_AS(Mat(Field::Real, 1, 1, {Complex(0, 1)}), InvalidInputError);
  CHECK_THROWS_AS(Mat(Field::Complex, 1, 1, {Complex(std::nan(""), 0)}), InvalidInputError);
  CHECK_THROWS_AS(Mat(Field::Complex, 2, 2, {1.0, 2.0, 3.0}), ShapeError);
  Mat m(Field::Real, 2, 2);
  CHECK_THROWS_AS(m.set(0, 0, Complex(1, 1)), InvalidInputError);
  CHECK_THROWS_AS(m.set(2, 0, 1.0), ShapeError);
  m.set(1, 0, 3.0);
  CHECK(m(1, 0) == Complex(3.0));
}

TEST_CASE("matmul") {
  CHECK(matmul(I(), R()) == R());
  CHECK(matmul(R(), R()) == -I());
  CHECK_THROWS_AS(matmul(Mat::zeros(2, 3), Mat::zeros(4, 2)), ShapeError);
  const Mat im = Mat::complex(1, 1, {Complex(0, 1)});
  CHECK(matmul(im, im)(0, 0) == Complex(-1, 0));
  CHECK(matmul(im, Mat::identity(1)).field() == Field::Complex);
}

TEST_CASE("adjoint") {
  CHECK(adjoint(R()) == -R());
  const Mat iM = Complex(0, 1) * M();
  CHECK(adjoint(iM) == Complex(0, -1) * M());
  CHECK(adjoint(I()) == I());

  std::mt19937_64 rng(3);
  const Mat a = testing::random_gaussian(3, 5, Field::Complex, rng);
  CHECK(adjoint(adjoint(a)) == a);
}

TEST_CASE("kron") {
  CHECK(kron(M(), Mat::identity(2)) == Mat::real(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1}));
  std::mt19937_64 rng(5);
  const Mat a = testing::random_gaussian(3, 2, Field::Complex, rng);
  CHECK(kron(Mat::identity(1), a) == a);
  CHECK(kron(R(), T()) ==
        Mat::real(4, 4, {0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0}));

  // mixed product property
  const Mat b = testing::random_gaussian(2, 3, Field::Complex, rng);
  const Mat c = testing::random_gaussian(2, 4, Field::Real, rng);
  const Mat d = testing::random_gaussian(3, 2, Field::Complex, rng);
  CHECK(max_abs_diff(matmul(kron(a, b), kron(c, d)), kron(matmul(a, c), matmul(b, d))) <= 1e-12);
  CHECK(kron({M(), T(), R()}) == kron(kron(M(), T()), R()));
}

TEST_CASE("stacking and blocks") {
  const Mat v = vstack({I(), R()});
  CHECK(v.rows() == 4);
  CHECK(submatrix(v, 2, 0, 2, 2) == R());
  CHECK(hstack({I(), M()}).cols() == 4);
  CHECK(block_diag(M(), T())(3, 2) == Complex(1.0));
  CHECK_THROWS_AS(vstack({I(), Mat::zeros(1, 3)}), ShapeError);
  CHECK_THROWS_AS(submatrix(I(), 1, 1, 2, 2), ShapeError);
  CHECK(trace(M()) == Complex(0.0));
}

TEST_CASE("svd") {
  const Mat d = Mat::real(2, 2, {3, 0, 0, 1});
  const auto s = singular_values(d);
  CHECK(s[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(s[1] == doctest::Approx(1.0).epsilon(1e-15));

  std::mt19937_64 rng(7);
  const Mat q = testing::random_unitary(5, Field::Complex, rng);
  for (double x : singular_values(q)) CHECK(std::abs(x - 1.0) <= 1e-12);

  const auto e1 = testing::real424_isometries();
  const auto cross = singular_values(matmul(adjoint(e1[0]), e1[1]));
  for (double x : cross) CHECK(std::abs(x - 1.0 / std::sqrt(3.0)) <= 1e-12);

  for (Field f : {Field::Real, Field::Complex})
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{4, 3}, {3, 6}, {60, 50}}) {
      const Mat a = testing::random_gaussian(m, n, f, rng);
      const Svd out = svd(a);
      const std::size_t k = std::min(m, n);
      CHECK(out.s.size() == k);
      CHECK(std::is_sorted(out.s.rbegin(), out.s.rend()));
      CHECK(max_abs_diff(matmul(adjoint(out.u), out.u), Mat::identity(k)) <= 1e-12);
      CHECK(max_abs_diff(matmul(adjoint(out.v), out.v), Mat::identity(k)) <= 1e-12);
      std::vector<Complex> diag(out.s.begin(), out.s.end());
      const Mat rebuilt = matmul(out.u, matmul(Mat::diag(diag, Field::Real), adjoint(out.v)));
      CHECK(max_abs_diff(rebuilt, a) <= 1e-11 * std::max(1.0, max_abs(a)));
      CHECK(out.u.field() == f);
    }
  CHECK(op_norm(d) == doctest::Approx(3.0));
}

TEST_CASE("polar_unitary") {
  CHECK(max_abs_diff(polar_unitary(2.0 * Mat::identity(3)), Mat::identity(3)) <= 1e-15);
  std::mt19937_64 rng(11);
  const Mat q = testing::random_unitary(4, Field::Complex, rng);
  CHECK(max_abs_diff(polar_unitary(q), q) <= 1e-12);

  const std::vector<Complex> dv = {2.0, Complex(1, 1)};
  const std::vector<Complex> expect = {1.0, Complex(1, 1) / std::sqrt(2.0)};
  CHECK(max_abs_diff(polar_unitary(Mat::diag(dv, Field::Complex)),
                     Mat::diag(expect, Field::Complex)) <= 1e-15);

  const std::vector<Complex> p = {3.0, 0.5, 2.0, 1.25};
  CHECK(max_abs_diff(polar_unitary(matmul(q, Mat::diag(p, Field::Real))), q) <= 1e-10);

  CHECK_THROWS_AS(polar_unitary(Mat::real(2, 2, {1, 1, 1, 1})), SingularInputError);
  CHECK_THROWS_AS(polar_unitary(Mat::zeros(2, 3)), ShapeError);
}

TEST_CASE("nullspace") {
  CHECK(nullspace(Mat::zeros(3, 3), 1e-10) == Mat::identity(3));
  CHECK(nullspace(Mat::real(2, 2, {2, 1, 1, 3}), 1e-10).cols() == 0);
  const Mat ns = nullspace(Mat::real(2, 2, {1, 1, 1, 1}), 1e-10);
  REQUIRE(ns.cols() == 1);
  const double h = 1.0 / std::sqrt(2.0);
  // fixed up to sign
  const double sign = ns(0, 0).real() > 0 ? 1.0 : -1.0;
  CHECK(max_abs_diff(sign * ns, Mat::real(2, 1, {h, -h})) <= 1e-12);

  std::mt19937_64 rng(13);
  const Mat a = matmul(testing::random_gaussian(6, 2, Field::Complex, rng),
                       testing::random_gaussian(2, 5, Field::Complex, rng));
  const Mat k = nullspace(a, 1e-10);
  CHECK(k.cols() == 3);
  CHECK(max_abs(matmul(a, k)) <= 1e-12);
}

TEST_CASE("lstsq recovers an exact solution") {
  std::mt19937_64 rng(17);
  const Mat a = testing::random_gaussian(8, 3, Field::Complex, rng);
  const Mat x = testing::random_gaussian(3, 1, Field::Complex, rng);
  CHECK(max_abs_diff(lstsq(a, matmul(a, x)), x) <= 1e-12);
}

TEST_CASE("residual helpers") {
  CHECK(unitarity_residual(R()) == 0.0);
  CHECK(skew_residual(R()) == 0.0);
  CHECK(skew_residual(M()) == doctest::Approx(2.0));
  CHECK(max_abs(Mat::real(1, 2, {-3, 2})) == 3.0);
}
