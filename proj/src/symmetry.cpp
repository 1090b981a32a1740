// SPDX-License-Identifier: Apache-2.0
#include "rhframes/symmetry.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "rhframes/errors.hpp"

namespace rhf {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) throw InvalidInputError("permutation is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  if (a >= n || b >= n) throw DomainError("transposition point out of range");
  Permutation p = identity(n);
  std::swap(p.image_[a], p.image_[b]);
  return p;
}

Permutation Permutation::cycle3(std::size_t n, std::size_t a, std::size_t b, std::size_t c) {
  if (a >= n || b >= n || c >= n || a == b || b == c || a == c)
    throw DomainError("3-cycle needs three distinct points in range");
  Permutation p = identity(n);
  p.image_[a] = b;
  p.image_[b] = c;
  p.image_[c] = a;
  return p;
}

Permutation Permutation::parse_one_line(std::string_view text) {
  std::vector<std::size_t> img;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ','))
      ++pos;
    if (pos >= text.size()) break;
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || value == 0)
      throw InvalidInputError("permutation must be 1-indexed one-line images, e.g. \"2 1 3\"");
    img.push_back(value - 1);
    pos = static_cast<std::size_t>(end - text.data());
    if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != ',')
      throw InvalidInputError("unexpected character in permutation");
  }
  if (img.empty()) throw InvalidInputError("empty permutation");
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

bool Permutation::is_even() const {
  std::vector<bool> seen(image_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string Permutation::one_line() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? " " : "") << image_[i] + 1;
  return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw ShapeError("compose: permutations act on different sets");
  std::vector<std::size_t> img(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) img[i] = a(b(i));
  return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------
// Certificates

double certificate_residual(const FusionFrame& frame, const Permutation& sigma,
                            const Mat& upsilon) {
  if (sigma.n() != frame.n()) throw ShapeError("certificate permutation size differs from n");
  if (upsilon.rows() != frame.d() || upsilon.cols() != frame.d())
    throw ShapeError("certificate unitary must be d x d");
  std::vector<Mat> proj;
  proj.reserve(frame.n());
  for (std::size_t i = 0; i < frame.n(); ++i) proj.push_back(frame.projection(i));
  const Mat ups_adj = adjoint(upsilon);
  double worst = 0.0;
  for (std::size_t i = 0; i < frame.n(); ++i)
    worst = std::max(worst, max_abs_diff(matmul(upsilon, matmul(proj[i], ups_adj)), proj[sigma(i)]));
  return worst;
}

namespace {

void require_skew(const RhoSimplex& s) {
  for (const Mat& b : s.mats)
    if (skew_residual(b) > 1e-12)
      throw InvalidInputError("transposition witness needs a skew-Hermitian rho simplex");
}

Mat transposition_unitary(const RhoSimplex& s, std::size_t j, std::size_t k) {
  const std::size_t n = s.n;
  if (!(j < k && k < n)) throw DomainError("transposition needs 0 <= j < k < n");
  const EitffParams p = eitff_params(n);
  const Mat& bj = s.mats[j];
  if (k + 1 < n) {
    const Mat diff = bj - s.mats[k];
    return p.alpha * block_diag(diff, -diff);
  }
  const Mat eye = Mat::identity(s.r, s.field);
  return vstack({hstack({p.alpha * bj, p.beta * eye}), hstack({-p.beta * eye, -p.alpha * bj})});
}

std::pair<std::size_t, std::size_t> moved_pair(const Permutation& t) {
  std::vector<std::size_t> moved;
  for (std::size_t i = 0; i < t.n(); ++i)
    if (t(i) != i) moved.push_back(i);
  if (moved.size() != 2) throw InvalidInputError("expected a transposition");
  return {moved[0], moved[1]};
}

}  // namespace

SymmetryCertificate transposition_witness(const RhoSimplex& skew, std::size_t j, std::size_t k) {
  require_skew(skew);
  SymmetryCertificate cert{Permutation::transposition(skew.n, j, k),
                           transposition_unitary(skew, j, k), 0.0};
  cert.residual = check_certificate(frame_from_simplex(skew), cert);
  return cert;
}

SymmetryCertificate alternating_witness(const FusionFrame& canonical, const Permutation& sigma1,
                                        const Permutation& sigma2) {
  const std::size_t n = canonical.n(), rh = canonical.r();
  if (n < 4) throw DomainError("alternating_witness: n must be at least 4");
  if (canonical.d() != 2 * rh) throw InvalidInputError("alternating_witness: requires d = 2r");
  if (sigma1.n() != n || sigma2.n() != n) throw ShapeError("permutations must act on [n]");
  const auto [j1, k1] = moved_pair(sigma1);
  const auto [j2, k2] = moved_pair(sigma2);

  const Field field = canonical.field();
  const EitffParams p = eitff_params(n);
  const Mat eye = Mat::identity(rh, field);
  const Mat zero = Mat::zeros(rh, rh, field);
  if (max_abs_diff(canonical[n - 1], vstack({eye, zero})) > 1e-9)
    throw InvalidInputError("alternating_witness: frame is not in canonical form");

  // doubled skew simplex B_i = [[0, −B̂_i*], [B̂_i, 0]]
  RhoSimplex doubled{field, 2 * rh, n, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (max_abs_diff(submatrix(canonical[i], 0, 0, rh, rh), p.alpha * eye) > 1e-9)
      throw InvalidInputError("alternating_witness: frame is not in canonical form");
    const Mat b = (1.0 / p.beta) * submatrix(canonical[i], rh, 0, rh, rh);
    doubled.mats.push_back(vstack({hstack({zero, -adjoint(b)}), hstack({b, zero})}));
  }

  const Mat u1 = transposition_unitary(doubled, j1, k1);
  const Mat u2 = transposition_unitary(doubled, j2, k2);

  // P = [[I,0,0,0],[0,0,0,I],[0,I,0,0],[0,0,I,0]] in blocks of size r̂
  Mat perm(field, 4 * rh, 4 * rh);
  const std::size_t dest[4] = {0, 2, 3, 1};  // block column c lands in block row dest[c]
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t t = 0; t < rh; ++t) perm.set(dest[c] * rh + t, c * rh + t, 1.0);

  const Mat product = matmul(perm, matmul(matmul(u1, u2), adjoint(perm)));
  SymmetryCertificate cert{compose(sigma1, sigma2), submatrix(product, 0, 0, 2 * rh, 2 * rh), 0.0};
  cert.residual = check_certificate(canonical, cert);
  return cert;
}

std::optional<SymmetryCertificate> find_witness(const FusionFrame& frame,
                                                const Permutation& sigma, double tol,
                                                std::uint64_t seed) {
  if (sigma.n() != frame.n()) throw ShapeError("find_witness: permutation size differs from n");
  const std::size_t d = frame.d();
  const Field field = frame.field();
  const Mat eye = Mat::identity(d, field);

  // Row-major vec: vec(X Π) = (I ⊗ Πᵀ) vec X, vec(Π X) = (Π ⊗ I) vec X.
  std::vector<Mat> blocks;
  blocks.reserve(frame.n());
  for (std::size_t i = 0; i < frame.n(); ++i) {
    const Mat pi = frame.projection(i);
    Mat pi_t(field, d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) pi_t.set(a, b, pi(b, a));
    blocks.push_back(kron(eye, pi_t) - kron(frame.projection(sigma(i)), eye));
  }
  const Mat null = nullspace(vstack(std::span<const Mat>(blocks)), 1e-10);
  if (null.cols() == 0) return std::nullopt;

  auto unvec = [&](const Mat& coeffs) {
    const Mat v = matmul(null, coeffs);
    Mat x(field, d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) x.set(a, b, v(a * d + b, 0));
    return x;
  };

  std::vector<Mat> candidates;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Mat mix(field, null.cols(), 1);
  for (std::size_t k = 0; k < null.cols(); ++k) mix.set(k, 0, normal(rng));
  candidates.push_back(unvec(mix));
  for (std::size_t k = 0; k < null.cols(); ++k) {
    Mat e(field, null.cols(), 1);
    e.set(k, 0, 1.0);
    candidates.push_back(unvec(e));
  }

  for (const Mat& x : candidates) {
    const std::vector<double> s = singular_values(x);
    if (!(s.back() > 1e-8 * s.front())) continue;
    SymmetryCertificate cert{sigma, polar_unitary(x), 0.0};
    cert.residual = check_certificate(frame, cert);
    if (cert.residual <= tol) return cert;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Existence and constructions

std::string_view to_string(Existence e) noexcept {
  switch (e) {
    case Existence::Yes:
      return "yes";
    case Existence::No:
      return "no";
    case Existence::Unknown:
      return "unknown";
  }
  return "unknown";
}

ExistenceVerdict eitff_verdict(Field field, std::size_t r, std::size_t n) {
  if (n < 3) throw DomainError("existence queries need n >= 3");
  const std::size_t rho = rho_number(field, r);
  return {n <= rho + 2 ? Existence::Yes : Existence::No, "rh-existence (n <= rho+2)"};
}

ExistenceVerdict totally_symmetric_verdict(Field field, std::size_t r, std::size_t n) {
  if (n < 3) throw DomainError("existence queries need n >= 3");
  const std::size_t rho = rho_number(field, r);
  if (n <= rho + 1) return {Existence::Yes, "skew-simplex (n <= rho+1)"};
  if (n > rho + 2) return {Existence::No, "rh-existence (n <= rho+2)"};
  if (field == Field::Complex)
    return {Existence::No, "complex-total-symmetry (requires n <= rho+1)"};
  switch (decompose_r(r).c) {
    case 0:
    case 1:
      return {Existence::Yes, "real-total-symmetry (c in {0,1} at n = rho+2)"};
    case 3:
      return {Existence::No, "real-total-symmetry (c = 3 reduces to the complex case)"};
    default:
      return {Existence::Unknown, "real-total-symmetry (c = 2 at n = rho+2 is open)"};
  }
}

namespace {

bool anticommutes(const Mat& a, const Mat& b) {
  return max_abs(matmul(a, b) + matmul(b, a)) <= 1e-12;
}

}  // namespace

Lemma5Data lemma5_construction(Field field, std::size_t r, std::size_t n) {
  if (n < 4) throw DomainError("lemma5_construction: n must be at least 4");
  const ExistenceVerdict v = totally_symmetric_verdict(field, r, n);
  const std::size_t rho = rho_number(field, r);
  const std::string detail = "n=" + std::to_string(n) + ", rho=" + std::to_string(rho);
  if (v.value == Existence::Unknown)
    throw UnknownFeasibilityError("totally symmetric EITFF existence is open (" + detail + ")");
  if (v.value == Existence::No)
    throw InfeasibleError(n > rho + 2 ? "n <= rho+2" : "n <= rho+1", detail + ", " + v.rule);

  Lemma5Data data;
  data.field = field;
  data.r = r;
  data.n = n;
  data.cs.field = field;
  data.cs.r = r;
  data.cs.mats.push_back(Mat::identity(r, field));

  if (n <= rho + 1) {
    // n−2 anticommuting skew unitaries S_1..S_{n−2}; keep S_1..S_{n−3} and
    // take U = S_{n−3} S_{n−2}, which commutes with S_i (i < n−3) and
    // anticommutes with S_{n−3}.
    const RhoOrthonormalSeq base = build_rho_orthonormal(field, r, n - 1);
    const Mat last_adj = adjoint(base.mats.back());
    std::vector<Mat> skew;
    for (std::size_t i = 0; i + 1 < base.mats.size(); ++i)
      skew.push_back(matmul(last_adj, base.mats[i]));
    for (std::size_t i = 0; i + 1 < skew.size(); ++i) data.cs.mats.push_back(skew[i]);
    data.u = matmul(skew[skew.size() - 2], skew.back());
  } else {
    // real, n = ρ+2 with c ∈ {0, 1}
    const RHDecomposition dec = decompose_r(r);
    const Mat odd = Mat::identity(dec.odd_part());
    std::vector<Mat> skew;
    Mat u;
    std::size_t size = 0;
    std::size_t inflations = 0;
    using namespace gen;
    if (dec.c == 1) {
      u = kron(M(), odd);
      skew.push_back(kron(R(), odd));
      size = 2 * dec.odd_part();
      inflations = dec.b;
    } else {
      u = kron({odd, I(), M(), M(), M()});
      for (const Mat& e : real_base_family(16)) skew.push_back(kron(odd, e));
      size = 16 * dec.odd_part();
      inflations = dec.b - 1;
    }
    for (std::size_t k = 0; k < inflations; ++k) {
      skew = inflate_real(skew, size);
      u = kron(Mat::identity(16), u);
      size *= 16;
    }
    // the member anticommuting with U goes last
    std::vector<Mat> commuting, anti;
    for (Mat& s : skew) (anticommutes(u, s) ? anti : commuting).push_back(std::move(s));
    if (anti.size() != 1)
      throw NumericError("lemma5_construction: expected exactly one member anticommuting with U");
    for (Mat& s : commuting) data.cs.mats.push_back(std::move(s));
    data.cs.mats.push_back(std::move(anti.front()));
    data.u = std::move(u);
  }
  if (lemma5_residual(data) > 1e-12)
    throw NumericError("lemma5_construction: construction failed its own check");
  return data;
}

double lemma5_residual(const Lemma5Data& data) {
  const auto& cs = data.cs.mats;
  if (cs.size() + 2 != data.n) throw ShapeError("Lemma5Data needs n-2 matrices");
  double worst = rho_orthonormal_residual(cs);
  worst = std::max(worst, max_abs_diff(cs.front(), Mat::identity(data.r)));
  worst = std::max(worst, unitarity_residual(data.u));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Mat uc = matmul(data.u, cs[i]);
    const Mat cu = matmul(cs[i], data.u);
    worst = std::max(worst, i + 1 == cs.size() ? max_abs(uc + cu) : max_abs(uc - cu));
  }
  return worst;
}

std::string_view to_string(SymmetryClass c) noexcept {
  switch (c) {
    case SymmetryClass::Total:
      return "total";
    case SymmetryClass::Alternating:
      return "alternating";
    case SymmetryClass::Other:
      return "other";
  }
  return "other";
}

namespace {

std::vector<std::optional<SymmetryCertificate>> witnesses_for(
    const FusionFrame& frame, const std::vector<Permutation>& gens, double tol,
    std::uint64_t seed) {
  std::vector<std::optional<SymmetryCertificate>> out(gens.size());
  const auto count = static_cast<long long>(gens.size());
#pragma omp parallel for schedule(dynamic)
  for (long long g = 0; g < count; ++g) {
    const auto idx = static_cast<std::size_t>(g);
    out[idx] = find_witness(frame, gens[idx], tol, seed + idx);
  }
  return out;
}

}  // namespace

ProbeResult probe_symmetry(const FusionFrame& frame, double tol, std::uint64_t seed) {
  const std::size_t n = frame.n();
  if (n > 8) throw DomainError("probe_symmetry supports n <= 8");
  ProbeResult result;

  std::vector<Permutation> adjacent;
  for (std::size_t i = 0; i + 1 < n; ++i) adjacent.push_back(Permutation::transposition(n, i, i + 1));
  const auto tw = witnesses_for(frame, adjacent, tol, seed);
  const bool total = std::all_of(tw.begin(), tw.end(), [](const auto& w) { return w.has_value(); });
  for (const auto& w : tw)
    if (w) result.witnesses.push_back(*w);
  if (total) {
    result.cls = SymmetryClass::Total;
    return result;
  }

  std::vector<Permutation> cycles;
  for (std::size_t i = 0; i + 2 < n; ++i) cycles.push_back(Permutation::cycle3(n, i, i + 1, i + 2));
  const auto cw = witnesses_for(frame, cycles, tol, seed + adjacent.size());
  const bool alternating =
      std::all_of(cw.begin(), cw.end(), [](const auto& w) { return w.has_value(); });
  for (const auto& w : cw)
    if (w) result.witnesses.push_back(*w);
  result.cls = alternating ? SymmetryClass::Alternating : SymmetryClass::Other;
  return result;
}

}  // namespace rhf
