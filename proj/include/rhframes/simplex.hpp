// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "rhframes/linalg.hpp"
#include "rhframes/radon_hurwitz.hpp"

namespace rhf {

/// (m−1)×m real matrix whose columns are a regular simplex: unit vectors with
/// pairwise inner product −1/(m−1). Upper triangular, positive diagonal.
struct SimplexMatrix {
  std::size_t m = 0;
  Mat mat;
};

/// n−1 unitaries with B_i*B_j + B_j*B_i = −(2/(n−2)) I for i != j.
struct RhoSimplex {
  Field field = Field::Real;
  std::size_t r = 0;
  std::size_t n = 0;
  std::vector<Mat> mats;
};

// Ψ_2 = [1 −1]; Ψ_m = (1/(m−1)) [[m−1, −1ᵀ], [0, √(m(m−2)) Ψ_{m−1}]].
SimplexMatrix simplex_matrix(std::size_t m);

// ‖ΨᵀΨ − (mI − J)/(m−1)‖_max.
double simplex_gram_residual(const Mat& vectors_as_columns);

// B_j = Σ_i Ψ_{n−1}(i, j) C_i with n = seq.size() + 2.
// Throws InvalidInputError unless seq is ρ-orthonormal to 1e-10.
RhoSimplex rho_simplex_from_orthonormal(const RhoOrthonormalSeq& seq);

// (B_1* B_i)_i; first member is exactly I.
RhoSimplex normalize_rho_simplex(const RhoSimplex& s);

// max of unitarity residuals and ‖B_i*B_j + B_j*B_i + (2/(n−2)) I‖_max.
double rho_simplex_residual(const RhoSimplex& s);

// Recover the orthonormal basis (υ_1, …, υ_{m−1}) with φ_j = Σ_i Ψ_m(i, j) υ_i
// from m simplex vectors (columns of a real matrix) by Gram–Schmidt with one
// re-orthogonalization pass. The basis has υ_1 = φ_1, υ_j ∈ span(φ_1..φ_j), and
// υ_{m−1} a positive multiple of φ_{m−1} − φ_m.
//
// Gram residual above 1e-8, or a reconstruction miss above 1e-10, throws
// InvalidInputError.
Mat simplex_basis_recovery(const Mat& vectors);

}  // namespace rhf
