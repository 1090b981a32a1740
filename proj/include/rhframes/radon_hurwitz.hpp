// SPDX-License-Identifier: Apache-2.0
//
// Radon–Hurwitz numbers and explicit families of unitaries satisfying
// C_i* C_j + C_j* C_i = 0 (i != j), over R and C.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rhframes/linalg.hpp"

namespace rhf {

/// r = (2a+1) · 2^(4b+c) with 0 <= c <= 3.
struct RHDecomposition {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  std::size_t odd_part() const noexcept { return 2 * a + 1; }
  friend bool operator==(const RHDecomposition&, const RHDecomposition&) = default;
};

RHDecomposition decompose_r(std::size_t r);

// ρ_R(r) = 8b + 2^c, ρ_C(r) = 8b + 2c + 2.
std::size_t rho_number(Field field, std::size_t r);

// (1/r) Re Tr(a* b).
double rho_inner(const Mat& a, const Mat& b);

// The 2×2 generators: M = diag(1,−1), T = [[0,1],[1,0]], R = [[0,−1],[1,0]].
namespace gen {
Mat I();
Mat M();
Mat T();
Mat R();
}  // namespace gen

/// A sequence of r×r unitaries, pairwise ρ-orthonormal.
struct RhoOrthonormalSeq {
  Field field = Field::Real;
  std::size_t r = 0;
  std::vector<Mat> mats;
};

// Anticommuting skew-Hermitian unitaries in R^{r×r}, r ∈ {2, 4, 8, 16}, in the
// standard listed order. Length ρ_R(r) − 1. Other r → DomainError.
std::vector<Mat> real_base_family(std::size_t r);

// Size-16r family (R⊗R⊗R⊗R⊗C_i)_i followed by (E_i⊗I_r)_{i=1..8}, E = real_base_family(16).
// `r` is the size of the inputs (needed when `seq` is empty). Inputs must be
// pairwise anticommuting skew-Hermitian unitaries, else InvalidInputError.
std::vector<Mat> inflate_real(std::span<const Mat> seq, std::size_t r);

// Length-m ρ-orthonormal sequence in F^{r×r}.
//
// Complex: (i, 1) in C^{1×1}, doubled once per factor of two
//   (Ĉ_i ↦ [[0, −Ĉ_i*], [Ĉ_i, 0]], then append iM⊗I and I), each member
//   tensored on the left with I_(2a+1); the last m members are kept.
// Real: I followed by the base family for 2^c inflated b times, tensored on
//   the left with I_(2a+1); truncation keeps I and the last m−1 skew members.
//
// m > ρ_F(r) → InfeasibleError; m < 1 → DomainError.
RhoOrthonormalSeq build_rho_orthonormal(Field field, std::size_t r, std::size_t m);

// max_i ‖C_i*C_i − I‖_max and max_{i≠j} ‖C_i*C_j + C_j*C_i‖_max.
// Mixed sizes → ShapeError.
double rho_orthonormal_residual(std::span<const Mat> seq);
inline double rho_orthonormal_residual(const RhoOrthonormalSeq& seq) {
  return rho_orthonormal_residual(seq.mats);
}

// max_i ‖C_i* + C_i‖_max, max_i ‖C_i*C_i − I‖_max, max_{i≠j} ‖C_iC_j + C_jC_i‖_max.
double anticommuting_skew_residual(std::span<const Mat> seq);

}  // namespace rhf
