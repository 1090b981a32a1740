// SPDX-License-Identifier: Apache-2.0
#include "rhframes/eitff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rhframes/errors.hpp"
#include "rhframes/radon_hurwitz.hpp"
#include "rhframes/symmetry.hpp"

namespace rhf {

FusionFrame::FusionFrame(Field field, std::size_t d, std::size_t r, std::vector<Mat> isometries)
    : field_(field), d_(d), r_(r), isos_(std::move(isometries)) {
  if (d == 0 || r == 0) throw DomainError("fusion frame needs d, r >= 1");
  if (isos_.size() < 2) throw DomainError("fusion frame needs at least two subspaces");
  for (Mat& phi : isos_) {
    if (phi.rows() != d || phi.cols() != r)
      throw ShapeError("isometry is " + std::to_string(phi.rows()) + "x" +
                       std::to_string(phi.cols()) + ", expected " + std::to_string(d) + "x" +
                       std::to_string(r));
    phi = phi.as_field(field);
  }
}

Mat FusionFrame::projection(std::size_t i) const {
  const Mat& phi = isos_.at(i);
  return matmul(phi, adjoint(phi));
}

EitffParams eitff_params(std::size_t n) {
  if (n < 3) throw DomainError("eitff_params: n must be at least 3");
  const double nn = static_cast<double>(n);
  EitffParams p;
  p.n = n;
  p.alpha = std::sqrt((nn - 2.0) / (2.0 * nn - 2.0));
  p.beta = std::sqrt(nn / (2.0 * nn - 2.0));
  p.sigma = p.alpha;
  return p;
}

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::Generic:
      return "generic";
    case Variant::Skew:
      return "skew";
    case Variant::TotallySymmetric:
      return "totally_symmetric";
  }
  return "generic";
}

std::optional<Variant> parse_variant(std::string_view s) noexcept {
  if (s == "generic") return Variant::Generic;
  if (s == "skew") return Variant::Skew;
  if (s == "totally_symmetric") return Variant::TotallySymmetric;
  return std::nullopt;
}

FusionFrame frame_from_simplex(const RhoSimplex& s) {
  const EitffParams p = eitff_params(s.n);
  if (s.mats.size() + 1 != s.n) throw ShapeError("rho simplex must have n-1 members");
  const Mat eye = Mat::identity(s.r, s.field);
  std::vector<Mat> isos;
  isos.reserve(s.n);
  for (const Mat& b : s.mats) isos.push_back(vstack({p.alpha * eye, p.beta * b}));
  isos.push_back(vstack({eye, Mat::zeros(s.r, s.r, s.field)}));
  return FusionFrame(s.field, 2 * s.r, s.r, std::move(isos));
}

RhoSimplex skew_rho_simplex(Field field, std::size_t r, std::size_t n) {
  if (n < 3) throw DomainError("skew rho simplex needs n >= 3");
  const std::size_t rho = rho_number(field, r);
  if (n > rho + 1)
    throw InfeasibleError("n <= rho+1", "n=" + std::to_string(n) + ", rho=" + std::to_string(rho));
  const RhoOrthonormalSeq base = build_rho_orthonormal(field, r, n - 1);
  const Mat last_adj = adjoint(base.mats.back());
  RhoOrthonormalSeq skew{field, r, {}};
  for (std::size_t i = 0; i + 1 < base.mats.size(); ++i)
    skew.mats.push_back(matmul(last_adj, base.mats[i]));
  return rho_simplex_from_orthonormal(skew);
}

FusionFrame build_eitff(Field field, std::size_t r, std::size_t n, Variant variant) {
  if (r < 1) throw DomainError("build_eitff: r must be positive");
  if (n < 3) throw DomainError("build_eitff: n must be at least 3");
  const std::size_t rho = rho_number(field, r);
  const std::string detail = "n=" + std::to_string(n) + ", rho=" + std::to_string(rho);

  switch (variant) {
    case Variant::Generic: {
      if (n > rho + 2) throw InfeasibleError("n <= rho+2", detail);
      return frame_from_simplex(rho_simplex_from_orthonormal(build_rho_orthonormal(field, r, n - 2)));
    }
    case Variant::Skew:
      return frame_from_simplex(skew_rho_simplex(field, r, n));
    case Variant::TotallySymmetric: {
      const ExistenceVerdict v = totally_symmetric_verdict(field, r, n);
      if (v.value == Existence::Unknown)
        throw UnknownFeasibilityError("existence of a totally symmetric EITFF is open here (" +
                                      detail + ")");
      if (v.value == Existence::No)
        throw InfeasibleError(n > rho + 2 ? "n <= rho+2" : "n <= rho+1", detail + ", " + v.rule);
      if (n <= rho + 1) return frame_from_simplex(skew_rho_simplex(field, r, n));
      if (n == 3)  // trivial: every EITFF with three subspaces is totally symmetric
        return build_eitff(field, r, n, Variant::Generic);
      const Lemma5Data data = lemma5_construction(field, r, n);
      return frame_from_simplex(rho_simplex_from_orthonormal(data.cs));
    }
  }
  throw DomainError("unknown variant");
}

double block_coherence(const FusionFrame& frame, kernels::Exec exec) {
  const auto& isos = frame.isometries();
  return kernels::max_over_pairs(
      frame.n(),
      [&](std::size_t i, std::size_t j) { return op_norm(matmul(adjoint(isos[i]), isos[j])); },
      exec);
}

double welch_bound(std::size_t d, std::size_t r, std::size_t n) {
  if (n < 2) throw DomainError("welch_bound: n must be at least 2");
  if (n * r < d) throw DomainError("welch_bound: requires nr >= d");
  return std::sqrt(eitff_sigma_squared(d, r, n));
}

double eitff_sigma_squared(std::size_t d, std::size_t r, std::size_t n) {
  const double nr = static_cast<double>(n * r);
  const double dd = static_cast<double>(d);
  return (nr - dd) / (dd * static_cast<double>(n - 1));
}

std::vector<PairAngles> principal_angles(const FusionFrame& frame) {
  const auto& isos = frame.isometries();
  std::vector<PairAngles> out;
  for (std::size_t i = 0; i < frame.n(); ++i)
    for (std::size_t j = i + 1; j < frame.n(); ++j) {
      PairAngles pa{i, j, {}};
      for (double s : singular_values(matmul(adjoint(isos[i]), isos[j])))
        pa.theta.push_back(std::acos(std::clamp(s, 0.0, 1.0)));
      out.push_back(std::move(pa));
    }
  return out;
}

double spectral_distance(const FusionFrame& frame, std::size_t i, std::size_t j) {
  if (i == j) throw DomainError("spectral_distance: indices must differ");
  const double c = std::min(1.0, op_norm(matmul(adjoint(frame[i]), frame[j])));
  return std::sqrt(1.0 - c * c);
}

bool VerificationReport::pass() const noexcept {
  return isometry_residual <= tolerance && tightness_residual <= tolerance &&
         equiisoclinic_residual <= tolerance && welch_gap <= tolerance && gerzon_ok;
}

std::size_t gerzon_bound(Field field, std::size_t d, std::size_t r) {
  if (field == Field::Real) return d * (d + 1) / 2 - r * (r + 1) / 2 + 1;
  return d * d - r * r + 1;
}

VerificationReport verify_eitff(const FusionFrame& frame, double tol, kernels::Exec exec) {
  const auto& isos = frame.isometries();
  const std::size_t n = frame.n(), d = frame.d(), r = frame.r();
  VerificationReport rep;
  rep.tolerance = tol;

  const Mat eye_r = Mat::identity(r);
  for (const Mat& phi : isos)
    rep.isometry_residual =
        std::max(rep.isometry_residual, max_abs_diff(matmul(adjoint(phi), phi), eye_r));

  const double a = static_cast<double>(n * r) / static_cast<double>(d);
  rep.tightness_residual =
      max_abs_diff(kernels::frame_operator(isos, exec), a * Mat::identity(d));

  const Mat target = eitff_sigma_squared(d, r, n) * eye_r;
  rep.equiisoclinic_residual = kernels::max_over_pairs(
      n,
      [&](std::size_t i, std::size_t j) {
        const Mat g = matmul(adjoint(isos[i]), isos[j]);
        const Mat gh = adjoint(g);
        return std::max(max_abs_diff(matmul(g, gh), target), max_abs_diff(matmul(gh, g), target));
      },
      exec);

  rep.block_coherence = block_coherence(frame, exec);
  rep.welch_bound = n * r >= d ? welch_bound(d, r, n) : 0.0;
  rep.welch_gap = rep.block_coherence - rep.welch_bound;

  rep.gerzon_bound = gerzon_bound(frame.field(), d, r);
  const double spread = kernels::max_over_pairs(
      n,
      [&](std::size_t i, std::size_t j) {
        return max_abs_diff(frame.projection(i), frame.projection(j));
      },
      exec);
  const bool identical = spread <= tol;
  rep.gerzon_ok = identical || n <= rep.gerzon_bound;
  return rep;
}

CanonicalForm canonicalize(const FusionFrame& frame) {
  const std::size_t d = frame.d(), r = frame.r(), n = frame.n();
  if (d != 2 * r) throw DomainError("canonicalize: requires d = 2r");
  if (n < 3) throw DomainError("canonicalize: requires n >= 3");
  if (!verify_eitff(frame, 1e-8).pass())
    throw InvalidInputError("canonicalize: input is not an EITFF at tolerance 1e-8");

  const Field field = frame.field();
  const Mat& last = frame[n - 1];
  // Orthonormal basis of im(Φ_n)^⊥: the polar factor of the bottom coordinates
  // projected onto the complement, which is exactly [0; I] when Φ_n = [I; 0].
  const Mat bottom = vstack({Mat::zeros(r, r, field), Mat::identity(r, field)});
  const Mat projected = bottom - matmul(last, matmul(adjoint(last), bottom));
  Mat comp;
  const Svd ps = svd(projected);
  if (ps.s.back() > 1e-6 * ps.s.front())
    comp = matmul(ps.u, adjoint(ps.v));
  else
    comp = nullspace(adjoint(last), 1e-8);
  const Mat upsilon_adj = adjoint(hstack({last, comp}));

  const EitffParams p = eitff_params(n);
  RhoSimplex simplex{field, r, n, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Mat omega = matmul(upsilon_adj, frame[i]);
    const Mat z = (1.0 / p.alpha) * submatrix(omega, 0, 0, r, r);
    const Mat lower = submatrix(omega, r, 0, r, r);
    simplex.mats.push_back((1.0 / p.beta) * matmul(lower, adjoint(z)));
  }
  FusionFrame canonical = frame_from_simplex(simplex);
  if (!verify_eitff(canonical, 1e-9).pass())
    throw NumericError("canonicalize: canonical frame lost accuracy");
  return {std::move(canonical), std::move(simplex)};
}

FusionFrame naimark_complement(const FusionFrame& frame) {
  const std::size_t n = frame.n(), d = frame.d(), r = frame.r();
  const std::size_t nr = n * r;
  if (nr == d) throw DomainError("naimark_complement: nr = d leaves an empty complement");
  const double a = static_cast<double>(nr) / static_cast<double>(d);
  if (nr < d ||
      max_abs_diff(kernels::frame_operator(frame.isometries(), kernels::Exec::Parallel),
                   a * Mat::identity(d)) > 1e-8)
    throw InvalidInputError("naimark_complement: frame is not tight");

  const Mat synth = hstack(std::span<const Mat>(frame.isometries()));
  const Mat gram = matmul(adjoint(synth), synth);
  const double scale_out = static_cast<double>(nr) / static_cast<double>(nr - d);
  const Mat h = scale_out * (Mat::identity(nr) - (1.0 / a) * gram);

  // h is a scaled projection with eigenvalues 0 and nr/(nr−d)
  const Svd e = svd(h);
  const std::size_t dim = nr - d;
  std::size_t kept = 0;
  while (kept < e.s.size() && e.s[kept] > 0.5 * scale_out) ++kept;
  if (kept != dim)
    throw NumericError("naimark_complement: expected rank " + std::to_string(dim) + ", found " +
                       std::to_string(kept));

  Mat tilde(frame.field(), dim, nr);
  for (std::size_t k = 0; k < dim; ++k) {
    const double root = std::sqrt(e.s[k]);
    for (std::size_t c = 0; c < nr; ++c) tilde.set(k, c, root * std::conj(e.u(c, k)));
  }
  std::vector<Mat> isos;
  isos.reserve(n);
  for (std::size_t i = 0; i < n; ++i) isos.push_back(submatrix(tilde, 0, i * r, dim, r));
  return FusionFrame(frame.field(), dim, r, std::move(isos));
}

std::vector<BlockCoefficient> block_omp_recover(const FusionFrame& frame, const Mat& y,
                                                std::size_t k) {
  if (k < 1) throw DomainError("block_omp_recover: k must be at least 1");
  if (y.rows() != frame.d() || y.cols() != 1)
    throw ShapeError("block_omp_recover: y must be a d x 1 column");
  const std::size_t r = frame.r();
  const double ynorm = std::sqrt(std::max(0.0, trace(matmul(adjoint(y), y)).real()));

  std::vector<std::size_t> chosen;
  std::vector<Mat> atoms;
  Mat residual = y;
  Mat coeffs;
  for (std::size_t step = 0; step < k && chosen.size() < frame.n(); ++step) {
    const double rnorm = std::sqrt(trace(matmul(adjoint(residual), residual)).real());
    if (rnorm <= 1e-13 * ynorm || rnorm == 0.0) break;
    std::size_t best = frame.n();
    double best_corr = -1.0;
    for (std::size_t i = 0; i < frame.n(); ++i) {
      if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
      const Mat c = matmul(adjoint(frame[i]), residual);
      const double corr = std::sqrt(trace(matmul(adjoint(c), c)).real());
      if (corr > best_corr) {
        best_corr = corr;
        best = i;
      }
    }
    chosen.push_back(best);
    atoms.push_back(frame[best]);
    const Mat dict = hstack(std::span<const Mat>(atoms));
    coeffs = lstsq(dict, y);
    residual = y - matmul(dict, coeffs);
  }

  std::vector<BlockCoefficient> out;
  for (std::size_t s = 0; s < chosen.size(); ++s)
    out.push_back({chosen[s], submatrix(coeffs, s * r, 0, r, 1)});
  return out;
}

bool omp_recovery_guaranteed(double coherence, std::size_t k) {
  if (coherence <= 0.0) return true;
  return static_cast<double>(k) < 0.5 * (1.0 / coherence + 1.0);
}

}  // namespace rhf
