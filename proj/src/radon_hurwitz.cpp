// SPDX-License-Identifier: Apache-2.0
#include "rhframes/radon_hurwitz.hpp"

#include <algorithm>
#include <string>

#include "rhframes/errors.hpp"
#include "rhframes/kernels.hpp"

namespace rhf {

RHDecomposition decompose_r(std::size_t r) {
  if (r == 0) throw DomainError("decompose_r: r must be positive");
  std::size_t e = 0;
  while (r % 2 == 0) {
    r /= 2;
    ++e;
  }
  return {(r - 1) / 2, e / 4, e % 4};
}

std::size_t rho_number(Field field, std::size_t r) {
  const auto [a, b, c] = decompose_r(r);
  return field == Field::Real ? 8 * b + (std::size_t{1} << c) : 8 * b + 2 * c + 2;
}

double rho_inner(const Mat& a, const Mat& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("rho_inner: operands must be square of equal size");
  return trace(matmul(adjoint(a), b)).real() / static_cast<double>(a.rows());
}

namespace gen {
Mat I() { return Mat::identity(2); }
Mat M() { return Mat::real(2, 2, {1, 0, 0, -1}); }
Mat T() { return Mat::real(2, 2, {0, 1, 1, 0}); }
Mat R() { return Mat::real(2, 2, {0, -1, 1, 0}); }
}  // namespace gen

std::vector<Mat> real_base_family(std::size_t r) {
  using namespace gen;
  switch (r) {
    case 2:
      return {R()};
    case 4:
      return {kron(I(), R()), kron(R(), T()), kron(R(), M())};
    case 8:
      return {kron({M(), M(), R()}), kron({M(), T(), R()}), kron({M(), R(), I()}),
              kron({T(), R(), M()}), kron({T(), R(), T()}), kron({T(), I(), R()}),
              kron({R(), I(), I()})};
    case 16:
      return {kron({R(), T(), T(), T()}), kron({T(), R(), T(), M()}),
              kron({T(), M(), R(), T()}), kron({T(), T(), M(), R()}),
              kron({R(), M(), M(), M()}), kron({M(), R(), M(), T()}),
              kron({M(), T(), R(), M()}), kron({M(), M(), T(), R()})};
    default:
      throw DomainError("real_base_family: r must be 2, 4, 8 or 16, got " + std::to_string(r));
  }
}

double anticommuting_skew_residual(std::span<const Mat> seq) {
  if (seq.empty()) return 0.0;
  const std::size_t r = seq.front().rows();
  double worst = 0.0;
  for (const Mat& c : seq) {
    if (!c.is_square() || c.rows() != r) throw ShapeError("family members differ in size");
    worst = std::max({worst, skew_residual(c), unitarity_residual(c)});
  }
  const double pairs = kernels::max_over_pairs(
      seq.size(),
      [&](std::size_t i, std::size_t j) {
        return max_abs(matmul(seq[i], seq[j]) + matmul(seq[j], seq[i]));
      },
      kernels::Exec::Parallel);
  return std::max(worst, pairs);
}

std::vector<Mat> inflate_real(std::span<const Mat> seq, std::size_t r) {
  for (const Mat& c : seq)
    if (!c.is_square() || c.rows() != r)
      throw ShapeError("inflate_real: members must be " + std::to_string(r) + "x" +
                       std::to_string(r));
  if (anticommuting_skew_residual(seq) > 1e-12)
    throw InvalidInputError("inflate_real: inputs are not anticommuting skew-Hermitian unitaries");

  using namespace gen;
  const Mat r4 = kron({R(), R(), R(), R()});
  std::vector<Mat> out;
  out.reserve(seq.size() + 8);
  for (const Mat& c : seq) out.push_back(kron(r4, c));
  for (const Mat& e : real_base_family(16)) out.push_back(kron(e, Mat::identity(r)));
  return out;
}

namespace {

std::vector<Mat> maximal_complex(const RHDecomposition& dec) {
  const Complex i(0.0, 1.0);
  std::vector<Mat> seq{Mat::complex(1, 1, {i}), Mat::complex(1, 1, {1.0})};
  std::size_t half = 1;
  for (std::size_t k = 0; k < 4 * dec.b + dec.c; ++k) {
    std::vector<Mat> next;
    next.reserve(seq.size() + 2);
    const Mat zero = Mat::zeros(half, half, Field::Complex);
    for (const Mat& c : seq)
      next.push_back(vstack({hstack({zero, -adjoint(c)}), hstack({c, zero})}));
    next.push_back(i * kron(gen::M(), Mat::identity(half, Field::Complex)));
    next.push_back(Mat::identity(2 * half, Field::Complex));
    seq = std::move(next);
    half *= 2;
  }
  return seq;
}

std::vector<Mat> maximal_real_skew(const RHDecomposition& dec) {
  std::vector<Mat> skew;
  std::size_t size = std::size_t{1} << dec.c;
  if (dec.c > 0) skew = real_base_family(size);
  for (std::size_t k = 0; k < dec.b; ++k) {
    skew = inflate_real(skew, size);
    size *= 16;
  }
  return skew;
}

}  // namespace

RhoOrthonormalSeq build_rho_orthonormal(Field field, std::size_t r, std::size_t m) {
  if (m < 1) throw DomainError("build_rho_orthonormal: m must be at least 1");
  const std::size_t rho = rho_number(field, r);
  if (m > rho)
    throw InfeasibleError("m <= rho", "m=" + std::to_string(m) + ", rho=" + std::to_string(rho));

  const RHDecomposition dec = decompose_r(r);
  const Mat odd = Mat::identity(dec.odd_part(), field);
  RhoOrthonormalSeq out{field, r, {}};
  out.mats.reserve(m);

  if (field == Field::Complex) {
    const std::vector<Mat> full = maximal_complex(dec);
    for (std::size_t k = full.size() - m; k < full.size(); ++k)
      out.mats.push_back(kron(odd, full[k]));
  } else {
    const std::vector<Mat> skew = maximal_real_skew(dec);
    out.mats.push_back(Mat::identity(r));
    for (std::size_t k = skew.size() - (m - 1); k < skew.size(); ++k)
      out.mats.push_back(kron(odd, skew[k]));
  }
  return out;
}

double rho_orthonormal_residual(std::span<const Mat> seq) {
  if (seq.empty()) return 0.0;
  const std::size_t r = seq.front().rows();
  std::vector<Mat> adj;
  adj.reserve(seq.size());
  double worst = 0.0;
  for (const Mat& c : seq) {
    if (!c.is_square() || c.rows() != r) throw ShapeError("sequence members differ in size");
    adj.push_back(adjoint(c));
    worst = std::max(worst, max_abs_diff(matmul(adj.back(), c), Mat::identity(r)));
  }
  const double pairs = kernels::max_over_pairs(
      seq.size(),
      [&](std::size_t i, std::size_t j) {
        return max_abs(matmul(adj[i], seq[j]) + matmul(adj[j], seq[i]));
      },
      kernels::Exec::Parallel);
  return std::max(worst, pairs);
}

}  // namespace rhf
