// SPDX-License-Identifier: Apache-2.0
#include "rhframes/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rhframes/errors.hpp"
#include "rhframes/kernels.hpp"

namespace rhf {

SimplexMatrix simplex_matrix(std::size_t m) {
  if (m < 2) throw DomainError("simplex_matrix: m must be at least 2, got " + std::to_string(m));
  Mat psi = Mat::real(1, 2, {1.0, -1.0});
  for (std::size_t k = 3; k <= m; ++k) {
    const double inv = 1.0 / static_cast<double>(k - 1);
    const double tail = std::sqrt(static_cast<double>(k * (k - 2)));
    Mat next(Field::Real, k - 1, k);
    next.set(0, 0, 1.0);
    for (std::size_t j = 1; j < k; ++j) next.set(0, j, -inv);
    for (std::size_t i = 0; i + 1 < k - 1; ++i)
      for (std::size_t j = 0; j + 1 < k; ++j) next.set(i + 1, j + 1, inv * tail * psi(i, j));
    psi = std::move(next);
  }
  return {m, std::move(psi)};
}

double simplex_gram_residual(const Mat& vectors) {
  const std::size_t m = vectors.cols();
  if (m < 2) throw DomainError("a simplex has at least two vectors");
  const Mat gram = matmul(adjoint(vectors), vectors);
  const double off = -1.0 / static_cast<double>(m - 1);
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      worst = std::max(worst, std::abs(gram(i, j) - Complex(i == j ? 1.0 : off)));
  return worst;
}

RhoSimplex rho_simplex_from_orthonormal(const RhoOrthonormalSeq& seq) {
  if (seq.mats.empty()) throw InvalidInputError("rho simplex needs at least one generator");
  if (rho_orthonormal_residual(seq) > 1e-10)
    throw InvalidInputError("rho_simplex_from_orthonormal: sequence is not rho-orthonormal");
  const std::size_t count = seq.mats.size();
  const std::size_t n = count + 2;
  const Mat psi = simplex_matrix(n - 1).mat;
  const std::size_t r = seq.mats.front().rows();

  RhoSimplex out{seq.field, r, n, {}};
  out.mats.reserve(n - 1);
  for (std::size_t j = 0; j < n - 1; ++j) {
    Mat b = Mat::zeros(r, r, seq.field);
    for (std::size_t i = 0; i < count; ++i) {
      const double coeff = psi(i, j).real();
      if (coeff != 0.0) b = b + coeff * seq.mats[i];
    }
    out.mats.push_back(std::move(b));
  }
  return out;
}

RhoSimplex normalize_rho_simplex(const RhoSimplex& s) {
  if (s.mats.empty()) return s;
  const Mat anchor = adjoint(s.mats.front());
  RhoSimplex out{s.field, s.r, s.n, {}};
  out.mats.reserve(s.mats.size());
  out.mats.push_back(Mat::identity(s.r, s.mats.front().field()));
  for (std::size_t i = 1; i < s.mats.size(); ++i) out.mats.push_back(matmul(anchor, s.mats[i]));
  return out;
}

double rho_simplex_residual(const RhoSimplex& s) {
  if (s.mats.empty()) return 0.0;
  if (s.n < 3) throw DomainError("rho simplex needs n >= 3");
  const std::size_t r = s.mats.front().rows();
  std::vector<Mat> adj;
  double worst = 0.0;
  for (const Mat& b : s.mats) {
    if (!b.is_square() || b.rows() != r) throw ShapeError("rho simplex members differ in size");
    adj.push_back(adjoint(b));
    worst = std::max(worst, max_abs_diff(matmul(adj.back(), b), Mat::identity(r)));
  }
  const Mat target = (-2.0 / static_cast<double>(s.n - 2)) * Mat::identity(r);
  const double pairs = kernels::max_over_pairs(
      s.mats.size(),
      [&](std::size_t i, std::size_t j) {
        return max_abs_diff(matmul(adj[i], s.mats[j]) + matmul(adj[j], s.mats[i]), target);
      },
      kernels::Exec::Parallel);
  return std::max(worst, pairs);
}

Mat simplex_basis_recovery(const Mat& vectors) {
  if (vectors.field() != Field::Real) throw InvalidInputError("simplex vectors must be real");
  const std::size_t dim = vectors.rows();
  const std::size_t m = vectors.cols();
  if (m < 2) throw InvalidInputError("a simplex has at least two vectors");
  if (simplex_gram_residual(vectors) > 1e-8)
    throw InvalidInputError("simplex_basis_recovery: input Gram matrix is not (mI - J)/(m-1)");

  auto column = [&](std::size_t j) {
    std::vector<double> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = vectors(i, j).real();
    return v;
  };
  auto dot = [](const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };

  std::vector<std::vector<double>> basis;
  basis.reserve(m - 1);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    std::vector<double> v = column(j);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : basis) {
        const double c = dot(u, v);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= c * u[i];
      }
    const double norm = std::sqrt(dot(v, v));
    if (!(norm > 1e-8)) throw InvalidInputError("simplex vectors are linearly dependent");
    for (double& x : v) x /= norm;
    basis.push_back(std::move(v));
  }

  Mat out(Field::Real, dim, m - 1);
  for (std::size_t k = 0; k < m - 1; ++k)
    for (std::size_t i = 0; i < dim; ++i) out.set(i, k, basis[k][i]);

  // φ_j = Σ Ψ_m(i, j) υ_i must hold for every column, including φ_m
  const Mat psi = simplex_matrix(m).mat;
  if (max_abs_diff(matmul(out, psi), vectors) > 1e-10)
    throw InvalidInputError("simplex_basis_recovery: vectors do not reconstruct from the basis");
  return out;
}

}  // namespace rhf
