// SPDX-License-Identifier: Apache-2.0
//
// Equi-isoclinic tight fusion frames (EITFFs) with d = 2r: construction from
// ρ-simplices, canonical form, optimality checks, Naimark complements and a
// block-OMP recovery routine.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rhframes/kernels.hpp"
#include "rhframes/linalg.hpp"
#include "rhframes/simplex.hpp"

namespace rhf {

/// n >= 2 matrices Φ_i of shape d×r. Isometry is not enforced here (a frame
/// read from disk may be corrupt); `verify_eitff` reports it.
class FusionFrame {
 public:
  FusionFrame(Field field, std::size_t d, std::size_t r, std::vector<Mat> isometries);

  Field field() const noexcept { return field_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t n() const noexcept { return isos_.size(); }
  const std::vector<Mat>& isometries() const noexcept { return isos_; }
  const Mat& operator[](std::size_t i) const { return isos_.at(i); }
  Mat projection(std::size_t i) const;

 private:
  Field field_;
  std::size_t d_;
  std::size_t r_;
  std::vector<Mat> isos_;
};

struct EitffParams {
  std::size_t n = 0;
  double alpha = 0.0;  // √((n−2)/(2n−2)), also the common cos of all principal angles
  double beta = 0.0;   // √(n/(2n−2))
  double sigma = 0.0;
};

EitffParams eitff_params(std::size_t n);

enum class Variant { Generic, Skew, TotallySymmetric };
std::string_view to_string(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view s) noexcept;

// Φ_i = [αI; βB_i] for i < n, Φ_n = [I; 0].
FusionFrame frame_from_simplex(const RhoSimplex& s);

// Builds an EITFF(2r, r, n) over `field`.
//   Generic:          n <= ρ+2, simplex from build_rho_orthonormal(field, r, n−2).
//   Skew:             n <= ρ+1, skew-Hermitian simplex from (C_{n−1}* C_i)_{i<n−1}.
//   TotallySymmetric: whenever totally_symmetric_exists(...) is yes.
// Infeasible parameters throw InfeasibleError carrying the violated bound.
FusionFrame build_eitff(Field field, std::size_t r, std::size_t n,
                        Variant variant = Variant::Generic);

// Skew-Hermitian ρ-simplex with n−1 members (requires n <= ρ_F(r)+1).
RhoSimplex skew_rho_simplex(Field field, std::size_t r, std::size_t n);

struct CanonicalForm {
  FusionFrame frame;
  RhoSimplex simplex;
};

// Moves Φ_n to [I; 0] by a unitary of the ambient space and rotates each
// subspace basis so the top block is αI; returns the equivalent frame in
// canonical shape and its ρ-simplex.
// d != 2r → DomainError; input failing verify_eitff at 1e-8 → InvalidInputError.
CanonicalForm canonicalize(const FusionFrame& frame);

double block_coherence(const FusionFrame& frame,
                       kernels::Exec exec = kernels::Exec::Parallel);

// √((nr−d)/(d(n−1))); nr < d or n < 2 → DomainError.
double welch_bound(std::size_t d, std::size_t r, std::size_t n);

// (nr−d)/(d(n−1)), the squared cosine every principal angle of an EITFF shares.
double eitff_sigma_squared(std::size_t d, std::size_t r, std::size_t n);

struct PairAngles {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<double> theta;  // nondecreasing, in [0, π/2]
};

// One entry per unordered pair i < j (the angles are symmetric in (i, j)).
std::vector<PairAngles> principal_angles(const FusionFrame& frame);

// √(1 − ‖Φ_i*Φ_j‖_op²). i == j → DomainError.
double spectral_distance(const FusionFrame& frame, std::size_t i, std::size_t j);

struct VerificationReport {
  double isometry_residual = 0.0;
  double tightness_residual = 0.0;
  double equiisoclinic_residual = 0.0;
  double welch_gap = 0.0;
  double block_coherence = 0.0;
  double welch_bound = 0.0;
  bool gerzon_ok = true;
  std::size_t gerzon_bound = 0;
  double tolerance = kDefaultTol;

  bool pass() const noexcept;
};

// Gerzon bound on the number of nonidentical equi-isoclinic r-subspaces of F^d.
std::size_t gerzon_bound(Field field, std::size_t d, std::size_t r);

VerificationReport verify_eitff(const FusionFrame& frame, double tol = kDefaultTol,
                                kernels::Exec exec = kernels::Exec::Parallel);

// Isometries of a tight frame's complement in dimension nr−d, with
// Φ̃_i*Φ̃_j = −(d/(nr−d)) Φ_i*Φ_j for i != j.
// Not tight (1e-8) → InvalidInputError; nr == d → DomainError.
FusionFrame naimark_complement(const FusionFrame& frame);

struct BlockCoefficient {
  std::size_t block = 0;
  Mat coeff;  // r × 1
};

// Greedy block selection (largest ‖Φ_i* residual‖, ties to the lowest index)
// with a least-squares refit over all selected blocks after each step.
// Stops after k steps or once the residual vanishes.
std::vector<BlockCoefficient> block_omp_recover(const FusionFrame& frame, const Mat& y,
                                                std::size_t k);

// k < (1/μ + 1)/2.
bool omp_recovery_guaranteed(double coherence, std::size_t k);

}  // namespace rhf
