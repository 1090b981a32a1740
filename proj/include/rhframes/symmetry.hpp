// SPDX-License-Identifier: Apache-2.0
//
// Permutation symmetries of subspace sequences: a permutation σ is a symmetry
// when some unitary Υ satisfies Υ Π_i Υ* = Π_σ(i) for every i.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rhframes/eitff.hpp"
#include "rhframes/linalg.hpp"
#include "rhframes/radon_hurwitz.hpp"
#include "rhframes/simplex.hpp"

namespace rhf {

/// Bijection on {0, …, n−1}. Serialized 1-indexed in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  // Zero-indexed images; throws InvalidInputError unless a bijection.
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t n);
  // Swap of zero-indexed points a and b.
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
  // a → b → c → a (zero-indexed).
  static Permutation cycle3(std::size_t n, std::size_t a, std::size_t b, std::size_t c);
  // Parses "2 1 3 4" (1-indexed images).
  static Permutation parse_one_line(std::string_view text);

  std::size_t n() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_.at(i); }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  bool is_identity() const noexcept;
  bool is_even() const;
  std::string one_line() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

// (a ∘ b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

struct SymmetryCertificate {
  Permutation sigma;
  Mat upsilon;  // d × d unitary
  double residual = 0.0;
};

// max_i ‖Υ Π_i Υ* − Π_σ(i)‖_max.
double certificate_residual(const FusionFrame& frame, const Permutation& sigma,
                            const Mat& upsilon);
inline double check_certificate(const FusionFrame& frame, const SymmetryCertificate& cert) {
  return certificate_residual(frame, cert.sigma, cert.upsilon);
}

// Explicit witness for the transposition (j k), 0 <= j < k <= n−1, of the
// frame built from a skew-Hermitian ρ-simplex (n = s.n):
//   k < n−1:  Υ = α · blkdiag(B_j − B_k, B_k − B_j)
//   k = n−1:  Υ = [[αB_j, βI], [−βI, −αB_j]]
// Non-skew simplex → InvalidInputError.
SymmetryCertificate transposition_witness(const RhoSimplex& skew, std::size_t j, std::size_t k);

// Witness for σ1 ∘ σ2 on a canonical EITFF(2r̂, r̂, n), n >= 4, by doubling
// its simplex into a skew one, forming both transposition witnesses there,
// conjugating by the block permutation and keeping the upper-left corner.
SymmetryCertificate alternating_witness(const FusionFrame& canonical, const Permutation& sigma1,
                                        const Permutation& sigma2);

// Solves Υ Π_i = Π_σ(i) Υ (all i) for a linear intertwiner via the null space
// of the stacked commutation operator; returns the polar unitary of an
// invertible solution when its residual is within tol. std::nullopt means no
// witness was found at this tolerance, not a proof that none exists.
std::optional<SymmetryCertificate> find_witness(const FusionFrame& frame,
                                                const Permutation& sigma,
                                                double tol = kDefaultTol,
                                                std::uint64_t seed = 0);

/// ρ-orthonormal (C_1 = I, …, C_{n−2}) and a unitary U anticommuting with
/// C_{n−2} and commuting with the others; such data yields a totally
/// symmetric EITFF(2r, r, n).
struct Lemma5Data {
  Field field = Field::Real;
  std::size_t r = 0;
  std::size_t n = 0;
  RhoOrthonormalSeq cs;
  Mat u;
};

enum class Existence { Yes, No, Unknown };
std::string_view to_string(Existence e) noexcept;

// Whether a totally symmetric EITFF(2r, r, n) exists over `field`, and the
// rule that decides it.
struct ExistenceVerdict {
  Existence value = Existence::No;
  std::string rule;
};
ExistenceVerdict totally_symmetric_verdict(Field field, std::size_t r, std::size_t n);
inline Existence totally_symmetric_exists(Field field, std::size_t r, std::size_t n) {
  return totally_symmetric_verdict(field, r, n).value;
}

// Whether any EITFF(2r, r, n) exists (n <= ρ_F(r) + 2).
ExistenceVerdict eitff_verdict(Field field, std::size_t r, std::size_t n);

// n >= 4 only. Infeasible → InfeasibleError; the open real case → UnknownFeasibilityError.
Lemma5Data lemma5_construction(Field field, std::size_t r, std::size_t n);

// max of ρ-orthonormality, ‖C_1 − I‖, U unitarity, ‖UC_{n−2} + C_{n−2}U‖ and
// ‖UC_i − C_iU‖ for i < n−2.
double lemma5_residual(const Lemma5Data& data);

enum class SymmetryClass { Total, Alternating, Other };
std::string_view to_string(SymmetryClass c) noexcept;

struct ProbeResult {
  SymmetryClass cls = SymmetryClass::Other;
  std::vector<SymmetryCertificate> witnesses;
};

// Tests adjacent transpositions (total) and then consecutive 3-cycles
// (alternating) with find_witness. n > 8 → DomainError.
ProbeResult probe_symmetry(const FusionFrame& frame, double tol = kDefaultTol,
                           std::uint64_t seed = 0);

}  // namespace rhf
